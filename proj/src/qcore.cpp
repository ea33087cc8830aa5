#include "qcalc/qcore.hpp"

#include "qcalc/errors.hpp"

#include <stdexcept>

namespace qcalc {

QPoly q_int_poly(long n) {
    if (n < 0) throw std::logic_error("q_int_poly: negative index");
    std::vector<BigRat> c(static_cast<size_t>(n), BigRat(1));
    return QPoly(std::move(c));
}

QRat q_int(long n) {
    if (n >= 0) return QRat(q_int_poly(n));
    // [-x]_q = -q^{-x} [x]_q
    return QRat(-1) * QRat::q_pow(n) * QRat(q_int_poly(-n));
}

QPoly q_factorial(long n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative index");
    QPoly acc = QPoly::one();
    for (long i = 2; i <= n; ++i) acc = acc * q_int_poly(i);
    return acc;
}

QPoly gauss_binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("gauss_binom: negative n");
    if (k < 0 || k > n) return QPoly::zero();
    // [n]_q! / ([n-k]_q! [k]_q!) computed as prod [n-i] / [k]!; the
    // division is exact.
    QPoly num = QPoly::one();
    for (long i = 0; i < k; ++i) num = num * q_int_poly(n - i);
    return num.div_exact(q_factorial(k));
}

namespace {

void enumerate_partitions(long remaining, long part, long k, long exponent, QPoly& acc) {
    if (part == k) {
        // d_k = remaining
        acc = acc + QPoly::monomial(static_cast<int>(exponent + k * remaining));
        return;
    }
    for (long d = 0; d <= remaining; ++d)
        enumerate_partitions(remaining - d, part + 1, k, exponent + part * d, acc);
}

} // namespace

QPoly gauss_binom_partition_oracle(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("partition oracle needs 0 <= k <= n");
    QPoly acc;
    if (k == 0) return QPoly::one(); // single empty tuple with exponent 0
    enumerate_partitions(n - k, 0, k, 0, acc);
    return acc;
}

QRat q_falling(long x, long k) {
    if (x < 0 || k < 0) throw std::invalid_argument("q_falling: negative argument");
    QRat acc(1);
    for (long i = 0; i < k; ++i) acc = acc * q_int(x - i);
    return acc;
}

QRat delta_q(long n, const std::vector<QRat>& f) {
    if (static_cast<long>(f.size()) != n + 1)
        throw ArityError("delta_q: need exactly n+1 values f(0..n)");
    QRat acc;
    for (long k = 0; k <= n; ++k) {
        QRat term = QRat(gauss_binom(n, k)) * QRat::q_pow(choose2(k)) *
                    f[static_cast<size_t>(n - k)];
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

QPoly q_binom_product(long n, const BigRat& a, const BigRat& b) {
    if (n < 0) throw std::invalid_argument("q_binom_product: negative n");
    QPoly acc = QPoly::one();
    for (long i = 1; i <= n; ++i) {
        acc = acc * (QPoly(a) + QPoly::monomial(static_cast<int>(i - 1), b));
    }
    return acc;
}

QSeries q_binom_series(long n, long j, SeriesSign sign, int order) {
    if (n < 1) throw SeriesDomainError("q_binom_series: n must be positive");
    if (j < 1) throw SeriesDomainError("q_binom_series: j must be >= 1");
    if (order < 1) throw SeriesDomainError("q_binom_series: order must be >= 1");
    QSeries acc(order);
    // Term k contributes binom(n+k-1, k)_q * (+-1)^k * q^{jk}; once
    // jk reaches the order everything below the truncation is in.
    for (long k = 0; k * j < order; ++k) {
        QSeries term = QSeries::from_poly(gauss_binom(n + k - 1, k), order)
                           .shift(static_cast<int>(k * j));
        if (sign == SeriesSign::minus && (k % 2 == 1))
            acc += -term;
        else
            acc += term;
    }
    return acc;
}

} // namespace qcalc
