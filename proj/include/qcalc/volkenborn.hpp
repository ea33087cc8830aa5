#pragma once

#include "qcalc/padic.hpp"
#include "qcalc/qrat.hpp"

#include <string>
#include <vector>

namespace qcalc {

enum class Measure { bosonic, fermionic };

/**
 * One entry of the fixed integrand catalog.  Every tag has an exact
 * closed-form reference elsewhere in the library, which is what keeps the
 * numeric oracle loop closed.
 *
 *   pow_q(m):            x -> [x]_q^m
 *   gauss_binom_f(n):    x -> binom(x, n)_q
 *   q_exp(m):            x -> q^{m x}
 *   multi_exp(k, i):     (x_1..x_k) -> q^{sum_l (k-l+i) x_l}
 *   multi_euler_pow(n, k, x):
 *                        (x_1..x_n) -> [x_1+..+x_n+x]_q^k q^{sum_l (n-l) x_l}
 */
struct IntegrandSpec {
    enum class Tag { pow_q, gauss_binom_f, q_exp, multi_exp, multi_euler_pow };

    static IntegrandSpec pow_q(long m);
    static IntegrandSpec gauss_binom_f(long n);
    static IntegrandSpec q_exp(long m);
    static IntegrandSpec multi_exp(long k, long i);
    static IntegrandSpec multi_euler_pow(long n, long k, long x);

    bool univariate() const;
    // Number of integration variables.
    long variables() const;
    std::string to_string() const;

    Tag tag = Tag::pow_q;
    long m = 0; // pow_q / q_exp exponent
    long n = 0; // gauss_binom_f index, or euler order (= variable count)
    long k = 0; // multi_exp variable count, or euler index
    long i = 0; // multi_exp shift
    long x = 0; // euler shift
};

// Level budgets: exceeding them is an error, never a silent truncation.
inline constexpr long long kUnivariateTermBudget = 78125;  // 5^7
inline constexpr long long kMultivariateTermBudget = 59049; // 3^10

/**
 * Level-N q-Riemann sum over Z_p: (1/[p^N]_q) sum_{j<p^N} q^j f(j) for
 * the bosonic measure, with q replaced by -q throughout for the
 * fermionic one.  Working precision is N + guard digits; the returned
 * value carries its own effective precision after the [p^N] division.
 */
PadicNum volkenborn(const IntegrandSpec& f, const PadicQ& q, int N, Measure measure,
                    int guard = 4);

enum class MultiMode { direct, factorized };

/**
 * The iterated (multivariate) level-N sum.  `direct` enumerates all
 * p^{vars*N} index tuples; `factorized` uses the per-variable
 * factorization (exact for multi_exp, after binomial expansion for
 * multi_euler_pow).  Both compute the same level-N quantity and must
 * agree to the reported precision.
 */
PadicNum volkenborn_multi(const IntegrandSpec& f, const PadicQ& q, int N,
                          Measure measure, MultiMode mode = MultiMode::direct,
                          int guard = 4);

// Measure mass of the coset j + p^N Z_p: q^j/[p^N]_q (resp. with -q).
PadicNum coset_mass(long long j, const PadicQ& q, int N, Measure measure,
                    int guard = 4);

struct ProbeRow {
    int N = 0;
    // Valuation of (level-N sum - reference); when the difference is zero
    // at the joint precision this is the precision bound and exact=false.
    long long valuation_lb = 0;
    bool exact = false;
};

// Convergence table of a Riemann-sum family against an exact reference,
// evaluated p-adically at the same q.
std::vector<ProbeRow> convergence_probe(const IntegrandSpec& f, const PadicQ& q,
                                        int N_min, int N_max, Measure measure,
                                        const QRat& reference, int guard = 4);

} // namespace qcalc
