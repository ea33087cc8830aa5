#pragma once

#include "qcalc/qrat.hpp"

#include <vector>

namespace qcalc {

// q-Stirling numbers of the second kind, alternating-sum form:
// q^{-k(k-1)/2}/[k]_q! * sum_j (-1)^j q^{j(j-1)/2} binom(k,j)_q [k-j]_q^n.
// Values are Laurent polynomials in q; stored as QRat.
QRat stirling2_s(long n, long k);

// Same family through the q-difference operator applied to x -> [x]_q^n
// at zero.  Kept as a separate code path so the two definitions can
// cross-check each other.
QRat stirling2_delta(long n, long k);

// The bivariate-index convention:
// (q-1)^{-k} sum_j (-1)^{k-j} C(k+n, k-j) binom(j+n, j)_q.
// Related to stirling2_s by C2(n,k) = S2(n+k, n); the audit verifies the
// bridge rather than assuming it.
QRat stirling2_c(long n, long k);

// q-Stirling numbers of the first kind: coefficient of X^k in
// prod_{j=0..n-1} (X - [j]_q).  Zero for k > n.
QRat stirling1(long n, long k);

// All first-kind coefficients for fixed n, index 0..n.
std::vector<QRat> stirling1_row(long n);

// Closed form:
// q^{n(n-1)/2}/(q-1)^{n-j} sum_{k=j..n} (-1)^{n-k} q^{k(k+1)/2 - nk}
//   binom(n,k)_q C(k,j).
QRat stirling1_closed(long n, long j);

} // namespace qcalc
