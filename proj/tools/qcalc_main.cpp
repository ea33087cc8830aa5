#include "qcalc/audit.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qbernoulli.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/tables.hpp"
#include "qcalc/volkenborn.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qcalc;

std::pair<long, long> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

IntegrandSpec parse_integrand(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("integrand must look like powq:2 or multiexp:2,1");
    const std::string name = text.substr(0, colon);
    const std::vector<long> args = parse_longs(text.substr(colon + 1));
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("integrand " + name + " takes " +
                                        std::to_string(n) + " parameter(s)");
    };
    if (name == "powq") { need(1); return IntegrandSpec::pow_q(args[0]); }
    if (name == "gaussbinom") { need(1); return IntegrandSpec::gauss_binom_f(args[0]); }
    if (name == "qexp") { need(1); return IntegrandSpec::q_exp(args[0]); }
    if (name == "multiexp") { need(2); return IntegrandSpec::multi_exp(args[0], args[1]); }
    if (name == "eulerpow") {
        need(3);
        return IntegrandSpec::multi_euler_pow(args[0], args[1], args[2]);
    }
    throw std::invalid_argument("unknown integrand: " + name);
}

// Exact closed form matching an integrand/measure pair, when one exists.
std::optional<QRat> auto_reference(const IntegrandSpec& f, Measure measure) {
    switch (f.tag) {
        case IntegrandSpec::Tag::pow_q:
            return measure == Measure::bosonic ? carlitz_beta(f.m)
                                               : euler_order(f.m, 1, 0);
        case IntegrandSpec::Tag::gauss_binom_f: {
            if (measure != Measure::bosonic) return std::nullopt;
            QRat v = QRat::q_pow(-choose2(f.n)) / QRat(q_int_poly(f.n + 1));
            return f.n % 2 == 1 ? -v : v;
        }
        case IntegrandSpec::Tag::q_exp:
            return measure == Measure::bosonic ? moment_bosonic(f.m)
                                               : moment_fermionic(f.m);
        case IntegrandSpec::Tag::multi_exp: {
            QRat v(1);
            for (long j = 0; j < f.k; ++j)
                v *= measure == Measure::bosonic ? moment_bosonic(f.i + j)
                                                 : moment_fermionic(f.i + j);
            return v;
        }
        case IntegrandSpec::Tag::multi_euler_pow:
            return measure == Measure::bosonic ? beta_order(f.k, f.n, f.x)
                                               : euler_order(f.k, f.n, f.x);
    }
    return std::nullopt;
}

void write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_file);
    out << text;
}

int run_table(const std::string& family, const std::string& n_range,
              const std::string& k_range, const std::string& m_range,
              const std::string& format, const std::string& out_file) {
    TableRequest req;
    req.family = family;
    const std::string primary = !n_range.empty() ? n_range : m_range;
    if (primary.empty()) throw std::invalid_argument("table needs --n or --m");
    std::tie(req.n_lo, req.n_hi) = parse_range(primary);
    if (!k_range.empty()) req.k_range = parse_range(k_range);
    if (format == "csv") req.format = TableFormat::csv;
    else if (format == "json") req.format = TableFormat::json;
    else if (format == "latex") req.format = TableFormat::latex;
    else throw std::invalid_argument("format must be csv, json or latex");
    write_output(emit_table(req), out_file);
    return 0;
}

int run_audit_cmd(const std::string& ids, long max_n, const std::string& report_file) {
    std::vector<std::string> selection;
    if (!ids.empty() && ids != "all") {
        std::stringstream ss(ids);
        std::string item;
        while (std::getline(ss, item, ',')) selection.push_back(item);
    }
    AuditOptions options;
    options.max_n = max_n;
    const AuditReport report = run_audit(selection, options);
    for (const auto& r : report.results) {
        std::cerr << r.status << "  " << r.id << "  (" << r.measured_ms << " ms)";
        if (r.counterexample && !r.counterexample->params.empty()) {
            std::cerr << "  at";
            for (const auto& [sym, v] : r.counterexample->params)
                std::cerr << " " << sym << "=" << v;
        }
        std::cerr << "\n";
    }
    std::cerr << "summary: " << report.pass << " pass, " << report.fail << " fail, "
              << report.expected_fail_confirmed << " expected-fail-confirmed\n";
    const std::string json = report_to_json(report);
    if (!report_file.empty()) write_output(json, report_file);
    else std::cout << json;
    return report.all_must_pass_ok() ? 0 : 1;
}

int run_integrate(long p, long offset, int N, const std::string& integrand,
                  const std::string& measure_name, const std::string& reference) {
    const IntegrandSpec f = parse_integrand(integrand);
    Measure measure;
    if (measure_name == "bosonic") measure = Measure::bosonic;
    else if (measure_name == "fermionic") measure = Measure::fermionic;
    else throw std::invalid_argument("measure must be bosonic or fermionic");
    const PadicQ q = PadicQ::from_offset(p, offset);

    const PadicNum value = f.univariate()
                               ? volkenborn(f, q, N, measure)
                               : volkenborn_multi(f, q, N, measure);
    std::cout << "integrand  " << f.to_string() << "\n"
              << "measure    " << measure_name << "\n"
              << "p          " << p << ", q = 1 + " << offset << "*" << p << " = "
              << q.q().get_str() << "\n"
              << "level      N = " << N << " (" << f.variables() << " variable(s))\n"
              << "value      " << value.to_string() << "\n";
    if (reference == "auto") {
        const auto ref = auto_reference(f, measure);
        if (!ref) {
            std::cout << "reference  none available for this integrand/measure\n";
            return 0;
        }
        const auto rows = convergence_probe(f, q, N, N, measure, *ref);
        std::cout << "reference  " << ref->to_string() << "\n"
                  << "           = " << ref->eval(q.q()).get_str() << " at q\n"
                  << "difference valuation " << (rows[0].exact ? ">= " : ">= (precision) ")
                  << rows[0].valuation_lb << "\n";
    }
    return 0;
}

int run_limit(const std::string& family, const std::string& m_range, long order) {
    const auto [lo, hi] = parse_range(m_range);
    std::cout << emit_limits(family, lo, hi,
                             order > 0 ? std::optional<long>(order) : std::nullopt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-calculus workbench: identity audit, value tables and "
                 "p-adic integral evaluation"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Emit a value table for a number family");
    std::string t_family, t_n, t_k, t_m, t_format = "csv", t_out;
    table->add_option("--family", t_family, "family name")->required();
    table->add_option("--n", t_n, "primary index range A..B");
    table->add_option("--k", t_k, "secondary index / order range A..B");
    table->add_option("--m", t_m, "alias for --n for single-index families");
    table->add_option("--format", t_format, "csv|json|latex");
    table->add_option("--out", t_out, "output file (default stdout)");

    auto* audit = app.add_subcommand("audit", "Run the identity audit catalog");
    std::string a_ids = "all", a_report;
    long a_max_n = 0;
    audit->add_option("--ids", a_ids, "comma-separated case ids, or 'all'");
    audit->add_option("--max-n", a_max_n, "override the primary grid bound");
    audit->add_option("--report", a_report, "write the JSON report to this file");

    auto* integrate = app.add_subcommand("integrate", "Evaluate a p-adic q-integral");
    long i_p = 5, i_offset = 1;
    int i_N = 3;
    std::string i_integrand, i_measure = "bosonic", i_reference = "auto";
    integrate->add_option("--p", i_p, "odd prime")->required();
    integrate->add_option("--q-offset", i_offset, "t in q = 1 + t*p")->required();
    integrate->add_option("--N", i_N, "Riemann-sum level")->required();
    integrate->add_option("--integrand", i_integrand,
                          "powq:M|gaussbinom:N|qexp:M|multiexp:K,I|eulerpow:N,K,X")
        ->required();
    integrate->add_option("--measure", i_measure, "bosonic|fermionic");
    integrate->add_option("--reference", i_reference, "auto|none");

    auto* limit = app.add_subcommand("limit", "Classical q -> 1 values of a family");
    std::string l_family, l_m;
    long l_order = 0;
    limit->add_option("--family", l_family, "family name")->required();
    limit->add_option("--m", l_m, "index range A..B")->required();
    limit->add_option("--k", l_order, "order for higher-order families (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return run_table(t_family, t_n, t_k, t_m, t_format, t_out);
        if (audit->parsed()) return run_audit_cmd(a_ids, a_max_n, a_report);
        if (integrate->parsed())
            return run_integrate(i_p, i_offset, i_N, i_integrand, i_measure, i_reference);
        if (limit->parsed()) return run_limit(l_family, l_m, l_order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
