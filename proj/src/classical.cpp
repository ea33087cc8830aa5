#include "qcalc/classical.hpp"

#include <stdexcept>
#include <vector>

namespace qcalc {

BigRat classical_bernoulli(long m) {
    if (m < 0) throw std::invalid_argument("classical_bernoulli: negative index");
    std::vector<BigRat> b;
    b.reserve(static_cast<size_t>(m) + 1);
    b.push_back(BigRat(1));
    for (long k = 1; k <= m; ++k) {
        BigRat acc(0);
        for (long j = 0; j < k; ++j)
            acc += BigRat(binomial(k + 1, j)) * b[static_cast<size_t>(j)];
        b.push_back(-acc / BigRat(k + 1));
    }
    return b[static_cast<size_t>(m)];
}

Int classical_stirling2(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("classical_stirling2: negative index");
    if (k > n) return Int(0);
    std::vector<std::vector<Int>> s(static_cast<size_t>(n) + 1,
                                    std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
    s[0][0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                Int(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    return s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int classical_stirling1_signed(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("classical_stirling1_signed: negative index");
    if (k > n) return Int(0);
    std::vector<std::vector<Int>> s(static_cast<size_t>(n) + 1,
                                    std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
    s[0][0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] -
                Int(i - 1) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    return s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

} // namespace qcalc
