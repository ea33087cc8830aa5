#pragma once

#include "qcalc/bigrat.hpp"

namespace qcalc {

// Classical number families computed by their textbook recurrences.
// These exist as independent oracles for the q -> 1 limit checks and are
// deliberately free of any q machinery.

// Bernoulli numbers with B_1 = -1/2, via
// B_m = -(1/(m+1)) sum_{j<m} C(m+1, j) B_j.
BigRat classical_bernoulli(long m);

// Stirling numbers of the second kind: S(n,k) = S(n-1,k-1) + k S(n-1,k).
Int classical_stirling2(long n, long k);

// Signed Stirling numbers of the first kind:
// s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
Int classical_stirling1_signed(long n, long k);

} // namespace qcalc
