#pragma once

#include "qcalc/qrat.hpp"
#include "qcalc/qseries.hpp"

#include <vector>

namespace qcalc {

// q-integer [n]_q = (1-q^n)/(1-q).  For n >= 0 this is the polynomial
// 1 + q + ... + q^{n-1}; negative n yields -q^n [-n]_q, a genuine
// rational function.
QRat q_int(long n);

// [n]_q as a polynomial; n must be >= 0.
QPoly q_int_poly(long n);

// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
QPoly q_factorial(long n);

// Gaussian binomial coefficient via the factorial form with exact
// polynomial division; zero for k outside 0..n.
QPoly gauss_binom(long n, long k);

// Independent oracle: sum of q^{d_1 + 2 d_2 + ... + k d_k} over all
// (k+1)-tuples of nonnegative d_i with d_0 + ... + d_k = n - k, by
// brute-force enumeration.
QPoly gauss_binom_partition_oracle(long n, long k);

// q-falling factorial [x]_q [x-1]_q ... [x-k+1]_q for integer x >= 0;
// equals zero when x < k because the factor [0]_q appears.
QRat q_falling(long x, long k);

// n-th q-difference at zero: sum_k binom(n,k)_q (-1)^k q^{k(k-1)/2} f(n-k),
// taking the n+1 values f(0..n) explicitly.
QRat delta_q(long n, const std::vector<QRat>& f);

enum class SeriesSign { plus, minus };

// Exact expansion of prod_{i=1..n} (a + b q^{i-1}) with rational a, b.
QPoly q_binom_product(long n, const BigRat& a, const BigRat& b);

// sum_{k>=0} binom(n+k-1, k)_q b^k with b = (+-)q^j, truncated at the
// given order; requires j >= 1 so the sum is a well-defined power series.
QSeries q_binom_series(long n, long j, SeriesSign sign, int order);

} // namespace qcalc
