#include "qcalc/volkenborn.hpp"

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"

#include <sstream>
#include <stdexcept>

namespace qcalc {

IntegrandSpec IntegrandSpec::pow_q(long m) {
    if (m < 0) throw std::invalid_argument("pow_q: m must be >= 0");
    IntegrandSpec s;
    s.tag = Tag::pow_q;
    s.m = m;
    return s;
}

IntegrandSpec IntegrandSpec::gauss_binom_f(long n) {
    if (n < 0) throw std::invalid_argument("gauss_binom_f: n must be >= 0");
    IntegrandSpec s;
    s.tag = Tag::gauss_binom_f;
    s.n = n;
    return s;
}

IntegrandSpec IntegrandSpec::q_exp(long m) {
    if (m < 0) throw std::invalid_argument("q_exp: m must be >= 0");
    IntegrandSpec s;
    s.tag = Tag::q_exp;
    s.m = m;
    return s;
}

IntegrandSpec IntegrandSpec::multi_exp(long k, long i) {
    if (k < 1 || i < 0) throw std::invalid_argument("multi_exp: need k >= 1, i >= 0");
    IntegrandSpec s;
    s.tag = Tag::multi_exp;
    s.k = k;
    s.i = i;
    return s;
}

IntegrandSpec IntegrandSpec::multi_euler_pow(long n, long k, long x) {
    if (n < 1 || k < 0 || x < 0)
        throw std::invalid_argument("multi_euler_pow: need n >= 1, k >= 0, x >= 0");
    IntegrandSpec s;
    s.tag = Tag::multi_euler_pow;
    s.n = n;
    s.k = k;
    s.x = x;
    return s;
}

bool IntegrandSpec::univariate() const {
    return tag == Tag::pow_q || tag == Tag::gauss_binom_f || tag == Tag::q_exp;
}

long IntegrandSpec::variables() const {
    switch (tag) {
        case Tag::multi_exp: return k;
        case Tag::multi_euler_pow: return n;
        default: return 1;
    }
}

std::string IntegrandSpec::to_string() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::pow_q: os << "powq:" << m; break;
        case Tag::gauss_binom_f: os << "gaussbinom:" << n; break;
        case Tag::q_exp: os << "qexp:" << m; break;
        case Tag::multi_exp: os << "multiexp:" << k << "," << i; break;
        case Tag::multi_euler_pow: os << "eulerpow:" << n << "," << k << "," << x; break;
    }
    return os.str();
}

namespace {

long long checked_level_terms(long p, int N, long vars, long long budget) {
    if (N < 1) throw std::invalid_argument("volkenborn: level N must be >= 1");
    long long terms = 1;
    for (long v = 0; v < vars; ++v) {
        for (int e = 0; e < N; ++e) {
            terms *= p;
            if (terms > budget) {
                std::ostringstream os;
                os << "term budget exceeded: p^" << (static_cast<long long>(N) * vars)
                   << " > " << budget;
                throw TermBudgetExceeded(os.str());
            }
        }
    }
    return terms;
}

// q^0 .. q^{count-1} at working precision, times an optional stride m
// (i.e., powers of q^m).
std::vector<PadicNum> power_table(const PadicNum& q, long m, long long count) {
    std::vector<PadicNum> t;
    t.reserve(static_cast<size_t>(count));
    PadicNum step = q.pow(static_cast<unsigned long>(m));
    PadicNum acc = PadicNum::one(q.prime(), q.unit_precision());
    for (long long j = 0; j < count; ++j) {
        t.push_back(acc);
        acc = acc * step;
    }
    return t;
}

// [0]_q, [1]_q, ..., [count-1]_q as prefix sums of the q-power table.
std::vector<PadicNum> qint_table(const PadicNum& q, long long count) {
    std::vector<PadicNum> t;
    t.reserve(static_cast<size_t>(count));
    PadicNum acc = PadicNum::zero_ball(q.prime(), q.abs_precision());
    PadicNum qpow = PadicNum::one(q.prime(), q.unit_precision());
    for (long long j = 0; j < count; ++j) {
        t.push_back(acc);
        acc = acc + qpow;
        qpow = qpow * q;
    }
    return t;
}

struct LevelSum {
    PadicNum numerator;   // sum_j w_j f(j)
    PadicNum denominator; // [p^N]_{+-q} = sum_j w_j
};

LevelSum univariate_level_sum(const IntegrandSpec& f, const PadicQ& q, int N,
                              Measure measure, int W) {
    const long p = q.prime();
    const long long terms = checked_level_terms(p, N, 1, kUnivariateTermBudget);
    const PadicNum qp = q.q_padic(W);

    PadicNum inv_qfact = PadicNum::one(p, W);
    std::vector<PadicNum> qints;
    if (f.tag == IntegrandSpec::Tag::gauss_binom_f) {
        qints = qint_table(qp, terms);
        PadicNum qfact = PadicNum::one(p, W);
        for (long i = 1; i <= f.n; ++i) qfact = qfact * qints[static_cast<size_t>(i)];
        inv_qfact = PadicNum::one(p, W) / qfact;
    } else if (f.tag == IntegrandSpec::Tag::pow_q) {
        qints = qint_table(qp, terms);
    }

    std::vector<PadicNum> qexp_pows;
    if (f.tag == IntegrandSpec::Tag::q_exp) qexp_pows = power_table(qp, f.m, terms);

    PadicNum num = PadicNum::zero_ball(p, W);
    PadicNum den = PadicNum::zero_ball(p, W);
    PadicNum weight = PadicNum::one(p, W);
    for (long long j = 0; j < terms; ++j) {
        const bool negate = (measure == Measure::fermionic) && (j % 2 == 1);
        den = den + (negate ? -weight : weight);

        PadicNum fj = PadicNum::one(p, W);
        switch (f.tag) {
            case IntegrandSpec::Tag::pow_q:
                fj = f.m == 0 ? PadicNum::one(p, W)
                              : qints[static_cast<size_t>(j)].pow(
                                    static_cast<unsigned long>(f.m));
                break;
            case IntegrandSpec::Tag::gauss_binom_f:
                if (j < f.n) {
                    fj = PadicNum::zero(p);
                } else {
                    for (long i = 0; i < f.n; ++i)
                        fj = fj * qints[static_cast<size_t>(j - i)];
                    fj = fj * inv_qfact;
                }
                break;
            case IntegrandSpec::Tag::q_exp:
                fj = qexp_pows[static_cast<size_t>(j)];
                break;
            default:
                throw std::invalid_argument("volkenborn: multivariate integrand");
        }
        PadicNum term = weight * fj;
        num = num + (negate ? -term : term);
        weight = weight * qp;
    }
    return {num, den};
}

} // namespace

PadicNum volkenborn(const IntegrandSpec& f, const PadicQ& q, int N, Measure measure,
                    int guard) {
    if (!f.univariate())
        throw std::invalid_argument("volkenborn: use volkenborn_multi for " + f.to_string());
    if (guard < 1) throw std::invalid_argument("volkenborn: guard must be >= 1");
    const int W = N + guard;
    LevelSum s = univariate_level_sum(f, q, N, measure, W);
    return s.numerator / s.denominator;
}

PadicNum coset_mass(long long j, const PadicQ& q, int N, Measure measure, int guard) {
    const long p = q.prime();
    const long long terms = checked_level_terms(p, N, 1, kUnivariateTermBudget);
    if (j < 0 || j >= terms)
        throw std::invalid_argument("coset_mass: j outside 0..p^N-1");
    const int W = N + guard;
    const PadicNum qp = q.q_padic(W);
    PadicNum den = PadicNum::zero_ball(p, W);
    PadicNum weight = PadicNum::one(p, W);
    PadicNum wj = PadicNum::one(p, W);
    for (long long t = 0; t < terms; ++t) {
        const bool negate = (measure == Measure::fermionic) && (t % 2 == 1);
        den = den + (negate ? -weight : weight);
        if (t == j) wj = negate ? -weight : weight;
        weight = weight * qp;
    }
    return wj / den;
}

namespace {

PadicNum multi_direct(const IntegrandSpec& f, const PadicQ& q, int N, Measure measure,
                      int W) {
    const long p = q.prime();
    const long vars = f.variables();
    const long long side = checked_level_terms(p, N, 1, kMultivariateTermBudget);
    checked_level_terms(p, N, vars, kMultivariateTermBudget);
    const PadicNum qp = q.q_padic(W);

    // Per-variable tables of q^{(e_l + 1) j}: e_l is the integrand's
    // exponent coefficient for variable l, and the +1 is the measure
    // weight q^{j}; the fermionic sign is tracked as a parity.
    std::vector<std::vector<PadicNum>> var_pows;
    for (long l = 1; l <= vars; ++l) {
        const long el = (f.tag == IntegrandSpec::Tag::multi_exp) ? (f.k - l + f.i)
                                                                 : (f.n - l);
        var_pows.push_back(power_table(qp, el + 1, side));
    }

    std::vector<PadicNum> qints;
    if (f.tag == IntegrandSpec::Tag::multi_euler_pow)
        qints = qint_table(qp, vars * (side - 1) + f.x + 1);

    PadicNum num = PadicNum::zero_ball(p, W);
    const bool fermionic = (measure == Measure::fermionic);

    // Depth-first enumeration of all index tuples (j_1, ..., j_vars).
    struct Frame {
        long long j = 0;
    };
    std::vector<Frame> stack(static_cast<size_t>(vars));
    std::vector<PadicNum> acc;
    acc.reserve(static_cast<size_t>(vars) + 1);
    acc.push_back(PadicNum::one(p, W));
    std::vector<long long> jsum{0};

    long depth = 0;
    while (depth >= 0) {
        if (depth == vars) {
            PadicNum term = acc.back();
            if (f.tag == IntegrandSpec::Tag::multi_euler_pow && f.k > 0) {
                term = term * qints[static_cast<size_t>(jsum.back() + f.x)].pow(
                                  static_cast<unsigned long>(f.k));
            }
            const bool negate = fermionic && (jsum.back() % 2 == 1);
            num = num + (negate ? -term : term);
            acc.pop_back();
            jsum.pop_back();
            --depth;
            continue;
        }
        Frame& fr = stack[static_cast<size_t>(depth)];
        if (fr.j == side) {
            fr.j = 0;
            acc.pop_back();
            jsum.pop_back();
            --depth;
            continue;
        }
        acc.push_back(acc.back() * var_pows[static_cast<size_t>(depth)][static_cast<size_t>(fr.j)]);
        jsum.push_back(jsum.back() + fr.j);
        ++fr.j;
        ++depth;
    }

    // Denominator [p^N]_{+-q}^{vars}.
    PadicNum den1 = PadicNum::zero_ball(p, W);
    PadicNum weight = PadicNum::one(p, W);
    for (long long j = 0; j < side; ++j) {
        const bool negate = fermionic && (j % 2 == 1);
        den1 = den1 + (negate ? -weight : weight);
        weight = weight * qp;
    }
    return num / den1.pow(static_cast<unsigned long>(vars));
}

PadicNum multi_factorized(const IntegrandSpec& f, const PadicQ& q, int N,
                          Measure measure, int guard) {
    const long p = q.prime();
    if (f.tag == IntegrandSpec::Tag::multi_exp) {
        PadicNum acc = PadicNum::one(p, N + guard);
        for (long l = 1; l <= f.k; ++l)
            acc = acc * volkenborn(IntegrandSpec::q_exp(f.k - l + f.i), q, N, measure, guard);
        return acc;
    }
    if (f.tag != IntegrandSpec::Tag::multi_euler_pow)
        throw std::invalid_argument("volkenborn_multi: univariate integrand");

    // Binomial expansion of [x_1+..+x_n+x]^k turns the integrand into a
    // combination of multi_exp factors; the division by (1-q)^k costs
    // k * v_p(1-q) digits, so those are added to the working precision.
    const long long tval = q.one_minus_q_valuation();
    const int inner_guard = guard + static_cast<int>(f.k * tval);
    const int W = N + inner_guard;
    const PadicNum one_minus_q = PadicNum::from_rational(BigRat(1) - q.q(), p, W);
    PadicNum acc = PadicNum::zero_ball(p, W);
    for (long l = 0; l <= f.k; ++l) {
        PadicNum prod = PadicNum::from_rational(
            BigRat(binomial(f.k, l)) * rat_pow(q.q(), l * f.x), p, W);
        for (long j = 1; j <= f.n; ++j)
            prod = prod * volkenborn(IntegrandSpec::q_exp(l + f.n - j), q, N, measure,
                                     inner_guard);
        acc = acc + (l % 2 == 1 ? -prod : prod);
    }
    return acc / one_minus_q.pow(static_cast<unsigned long>(f.k));
}

} // namespace

PadicNum volkenborn_multi(const IntegrandSpec& f, const PadicQ& q, int N,
                          Measure measure, MultiMode mode, int guard) {
    if (f.univariate())
        throw std::invalid_argument("volkenborn_multi: use volkenborn for " + f.to_string());
    if (guard < 1) throw std::invalid_argument("volkenborn_multi: guard must be >= 1");
    if (mode == MultiMode::factorized) return multi_factorized(f, q, N, measure, guard);
    const int W = static_cast<int>(f.variables()) * N + guard;
    return multi_direct(f, q, N, measure, W);
}

std::vector<ProbeRow> convergence_probe(const IntegrandSpec& f, const PadicQ& q,
                                        int N_min, int N_max, Measure measure,
                                        const QRat& reference, int guard) {
    if (N_min < 1 || N_max < N_min)
        throw std::invalid_argument("convergence_probe: bad N range");
    const long p = q.prime();
    std::vector<ProbeRow> rows;
    for (int N = N_min; N <= N_max; ++N) {
        PadicNum value = f.univariate()
                             ? volkenborn(f, q, N, measure, guard)
                             : volkenborn_multi(f, q, N, measure, MultiMode::direct, guard);
        BigRat ref_val;
        try {
            ref_val = reference.eval(q.q());
        } catch (const EvalAtPole&) {
            throw std::invalid_argument("convergence_probe: reference has a pole at q");
        }
        const int ref_prec = static_cast<int>(N + guard + f.variables() * N);
        const PadicNum ref = PadicNum::from_rational(ref_val, p, ref_prec);
        const PadicNum diff = value - ref;
        ProbeRow row;
        row.N = N;
        row.valuation_lb = diff.valuation_lower_bound();
        row.exact = !diff.is_zero_ball();
        rows.push_back(row);
    }
    return rows;
}

} // namespace qcalc
