#include "qcalc/tables.hpp"

#include "qcalc/classical.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qbernoulli.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qstirling.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <sstream>
#include <vector>

namespace qcalc {

namespace {

constexpr long kMaxIndex = 24;
constexpr long kMaxOrder = 12;

struct Row {
    std::vector<std::pair<std::string, long>> indices;
    std::string value;
    std::string latex_value;
};

struct FamilyTable {
    std::vector<std::string> index_names;
    std::string latex_symbol;
    std::vector<Row> rows;
};

void check_range(long lo, long hi, long cap, const char* what) {
    if (lo < 0 || hi < lo) {
        std::ostringstream os;
        os << "empty or negative " << what << " range " << lo << ".." << hi;
        throw RangeBoundExceeded(os.str());
    }
    if (hi > cap) {
        std::ostringstream os;
        os << what << " range exceeds the desk-scale bound " << cap;
        throw RangeBoundExceeded(os.str());
    }
}

Row make_row(std::vector<std::pair<std::string, long>> idx, const QRat& v) {
    return Row{std::move(idx), v.to_string(), v.to_latex()};
}

FamilyTable build_table(const TableRequest& r) {
    FamilyTable t;
    const long n_lo = r.n_lo, n_hi = r.n_hi;
    auto k_lo = [&](long dflt) { return r.k_range ? r.k_range->first : dflt; };
    auto k_hi = [&](long dflt) { return r.k_range ? r.k_range->second : dflt; };

    auto two_index = [&](const char* a, const char* b, const std::string& sym,
                         const std::function<QRat(long, long)>& f, bool k_up_to_n) {
        check_range(n_lo, n_hi, kMaxIndex, a);
        t.index_names = {a, b};
        t.latex_symbol = sym;
        for (long n = n_lo; n <= n_hi; ++n) {
            const long klo = k_lo(0);
            const long khi = k_hi(k_up_to_n ? n : n_hi);
            check_range(klo, khi, kMaxIndex, b);
            for (long k = klo; k <= khi; ++k)
                t.rows.push_back(make_row({{a, n}, {b, k}}, f(n, k)));
        }
    };
    auto one_index = [&](const char* a, const std::string& sym,
                         const std::function<QRat(long)>& f) {
        check_range(n_lo, n_hi, kMaxIndex, a);
        t.index_names = {a};
        t.latex_symbol = sym;
        for (long m = n_lo; m <= n_hi; ++m)
            t.rows.push_back(make_row({{a, m}}, f(m)));
    };
    auto index_and_order = [&](const char* a, const char* b, const std::string& sym,
                               const std::function<QRat(long, long)>& f) {
        check_range(n_lo, n_hi, kMaxIndex, a);
        const long olo = k_lo(1), ohi = k_hi(1);
        check_range(olo, ohi, kMaxOrder, b);
        if (olo < 1) throw RangeBoundExceeded("order must be >= 1");
        t.index_names = {a, b};
        t.latex_symbol = sym;
        for (long n = n_lo; n <= n_hi; ++n)
            for (long k = olo; k <= ohi; ++k)
                t.rows.push_back(make_row({{a, n}, {b, k}}, f(n, k)));
    };

    if (r.family == "gauss-binom") {
        two_index("n", "k", "\\binom{n}{k}_q",
                  [](long n, long k) { return QRat(gauss_binom(n, k)); }, true);
    } else if (r.family == "stirling1") {
        two_index("n", "k", "s_1(n,k,q)", [](long n, long k) { return stirling1(n, k); },
                  true);
    } else if (r.family == "stirling2-S") {
        two_index("n", "k", "s_2(n,k,q)",
                  [](long n, long k) { return stirling2_s(n, k); }, true);
    } else if (r.family == "stirling2-C") {
        two_index("n", "k", "s_2(n,k,q)\\ (bivariate)",
                  [](long n, long k) { return stirling2_c(n, k); }, true);
    } else if (r.family == "carlitz-beta") {
        check_range(n_lo, n_hi, kMaxIndex, "m");
        const auto beta = carlitz_beta_seq(n_hi);
        one_index("m", "\\beta_{m,q}",
                  [&](long m) { return beta[static_cast<size_t>(m)]; });
    } else if (r.family == "beta-order") {
        index_and_order("n", "k", "\\beta_{n,q}^{(k)}(0)",
                        [](long n, long k) { return beta_order(n, k, 0); });
    } else if (r.family == "beta-neg-order") {
        index_and_order("n", "k", "\\beta_{n,q}^{(-k)}(0)",
                        [](long n, long k) { return beta_neg_order(n, k, 0); });
    } else if (r.family == "euler-order") {
        index_and_order("k", "n", "E_k^{(n)}(0,q)",
                        [](long k, long n) { return euler_order(k, n, 0); });
    } else if (r.family == "euler-neg-order") {
        index_and_order("k", "n", "E_k^{(-n)}(0,q)",
                        [](long k, long n) { return euler_neg_order(k, n, 0); });
    } else if (r.family == "classical-limits") {
        check_range(n_lo, n_hi, kMaxIndex, "m");
        const auto beta = carlitz_beta_seq(n_hi);
        one_index("m", "\\lim_{q\\to 1}\\beta_{m,q}", [&](long m) {
            return QRat(beta[static_cast<size_t>(m)].limit_q1());
        });
    } else {
        throw std::invalid_argument("unknown table family: " + r.family);
    }
    return t;
}

} // namespace

std::string emit_table(const TableRequest& request) {
    const FamilyTable t = build_table(request);
    std::ostringstream os;
    switch (request.format) {
        case TableFormat::csv: {
            for (size_t i = 0; i < t.index_names.size(); ++i) os << t.index_names[i] << ",";
            os << "value\n";
            for (const auto& row : t.rows) {
                for (const auto& [name, v] : row.indices) os << v << ",";
                os << row.value << "\n";
            }
            break;
        }
        case TableFormat::json: {
            using json = nlohmann::ordered_json;
            json doc;
            doc["family"] = request.family;
            doc["rows"] = json::array();
            for (const auto& row : t.rows) {
                json jr;
                for (const auto& [name, v] : row.indices) jr[name] = v;
                jr["value"] = row.value;
                doc["rows"].push_back(std::move(jr));
            }
            os << doc.dump(2) << "\n";
            break;
        }
        case TableFormat::latex: {
            os << "\\begin{tabular}{";
            for (size_t i = 0; i < t.index_names.size(); ++i) os << "r";
            os << "l}\n";
            for (const auto& name : t.index_names) os << "$" << name << "$ & ";
            os << "$" << t.latex_symbol << "$ \\\\\n\\hline\n";
            for (const auto& row : t.rows) {
                for (const auto& [name, v] : row.indices) os << v << " & ";
                os << "$" << row.latex_value << "$ \\\\\n";
            }
            os << "\\end{tabular}\n";
            break;
        }
    }
    return os.str();
}

std::string emit_limits(const std::string& family, long lo, long hi,
                        std::optional<long> order) {
    check_range(lo, hi, kMaxIndex, "m");
    const long ord = order.value_or(1);
    if (ord < 1 || ord > kMaxOrder) throw RangeBoundExceeded("order must be in 1..12");
    std::ostringstream os;
    auto emit_one = [&](long m, const BigRat& v) {
        os << "m=" << m << ": " << rat_to_string(v) << "\n";
    };
    if (family == "carlitz-beta" || family == "classical-limits") {
        const auto beta = carlitz_beta_seq(hi);
        for (long m = lo; m <= hi; ++m) emit_one(m, beta[static_cast<size_t>(m)].limit_q1());
    } else if (family == "gauss-binom") {
        for (long n = lo; n <= hi; ++n)
            for (long k = 0; k <= n; ++k)
                os << "n=" << n << ",k=" << k << ": "
                   << rat_to_string(QRat(gauss_binom(n, k)).limit_q1()) << "\n";
    } else if (family == "stirling1") {
        for (long n = lo; n <= hi; ++n)
            for (long k = 0; k <= n; ++k)
                os << "n=" << n << ",k=" << k << ": "
                   << rat_to_string(stirling1(n, k).limit_q1()) << "\n";
    } else if (family == "stirling2-S") {
        for (long n = lo; n <= hi; ++n)
            for (long k = 0; k <= n; ++k)
                os << "n=" << n << ",k=" << k << ": "
                   << rat_to_string(stirling2_s(n, k).limit_q1()) << "\n";
    } else if (family == "stirling2-C") {
        for (long n = lo; n <= hi; ++n)
            for (long k = 0; k <= n; ++k)
                os << "n=" << n << ",k=" << k << ": "
                   << rat_to_string(stirling2_c(n, k).limit_q1()) << "\n";
    } else if (family == "beta-order") {
        for (long m = lo; m <= hi; ++m) emit_one(m, beta_order(m, ord, 0).limit_q1());
    } else if (family == "beta-neg-order") {
        for (long m = lo; m <= hi; ++m) emit_one(m, beta_neg_order(m, ord, 0).limit_q1());
    } else if (family == "euler-order") {
        for (long m = lo; m <= hi; ++m) emit_one(m, euler_order(m, ord, 0).limit_q1());
    } else if (family == "euler-neg-order") {
        for (long m = lo; m <= hi; ++m) emit_one(m, euler_neg_order(m, ord, 0).limit_q1());
    } else {
        throw std::invalid_argument("unknown limit family: " + family);
    }
    return os.str();
}

} // namespace qcalc
