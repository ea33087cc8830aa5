#pragma once

#include "qcalc/qrat.hpp"
#include "qcalc/qseries.hpp"

#include <vector>

namespace qcalc {

// Carlitz q-Bernoulli numbers from the umbral recursion
//   beta_0 = 1,  q(q beta + 1)^k - beta_k = [k == 1],
// expanded symbolically: (q^{k+1} - 1) beta_k =
//   [k == 1] - q sum_{i<k} C(k,i) q^i beta_i.
QRat carlitz_beta(long m);

// beta_0 .. beta_m in one pass (the recursion is a prefix computation).
std::vector<QRat> carlitz_beta_seq(long m);

// Bosonic moment (n+1)/[n+1]_q, the exact value of the q-integral of
// q^{nx} against the q-measure.
QRat moment_bosonic(long n);

// Fermionic moment [2]_q/(1+q^{n+1}), the signed-measure counterpart.
QRat moment_fermionic(long n);

// Higher-order q-Bernoulli polynomial value at integer x >= 0, order
// k >= 1, built from the closed form
//   (1/(1-q)^n) sum_i (-1)^i C(n,i) q^{ix} prod_{j=1..k} (i+j)/[i+j]_q.
QRat beta_order(long n, long k, long x);

// Same value through the equivalent closed form with the classical and
// Gaussian binomials swapped against each other; the two routes must
// coincide and the audit checks that they do.
QRat beta_order_alt(long n, long k, long x);

// Negative-order family:
//   (1/(1-q)^n) sum_i (-1)^i C(n,i) q^{ix}
//     * binom(i+k,k)_q / C(i+k,k) * [k]_q!/k!.
QRat beta_neg_order(long n, long k, long x);

// Equivalent form with coefficients C(n+k, n-i)/C(n+k, k).
QRat beta_neg_order_alt(long n, long k, long x);

// Higher-order q-Euler value, index k >= 0, order n >= 1:
//   ([2]_q^n/(1-q)^k) sum_l C(k,l) (-1)^l q^{lx}
//     / ((1+q^{l+1}) ... (1+q^{l+n})).
QRat euler_order(long k, long n, long x);

// Negative-order q-Euler value:
//   (1/((1-q)^k [2]_q^n)) sum_l C(k,l) (-1)^l q^{lx}
//     prod_{i=1..n} (1+q^{l+i}).
QRat euler_neg_order(long k, long n, long x);

// Same value with the product replaced by its binomial-sum expansion
//   sum_i binom(n,i)_q q^{i(i-1)/2} q^{(l+1)i}.
QRat euler_neg_order_sum(long k, long n, long x);

struct Prop6Witness {
    bool equal = false;
    QSeries lhs; // euler_order expanded as a power series
    QSeries rhs; // the double-sum form truncated at the same order
};

// Coefficientwise comparison mod q^order of the euler_order closed form
// against the series expansion through the infinite q-binomial sum.
Prop6Witness prop6_check(long k, long n, long x, int order);

} // namespace qcalc
