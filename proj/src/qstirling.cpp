#include "qcalc/qstirling.hpp"

#include "qcalc/qcore.hpp"

#include <stdexcept>

namespace qcalc {

QRat stirling2_s(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2_s: negative index");
    QRat acc;
    for (long j = 0; j <= k; ++j) {
        QRat term = QRat::q_pow(choose2(j)) * QRat(gauss_binom(k, j)) *
                    QRat(q_int_poly(k - j)).pow(n);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return QRat::q_pow(-choose2(k)) / QRat(q_factorial(k)) * acc;
}

QRat stirling2_delta(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2_delta: negative index");
    std::vector<QRat> f;
    f.reserve(static_cast<size_t>(k) + 1);
    for (long j = 0; j <= k; ++j) f.push_back(QRat(q_int_poly(j)).pow(n));
    return QRat::q_pow(-choose2(k)) / QRat(q_factorial(k)) * delta_q(k, f);
}

QRat stirling2_c(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2_c: negative index");
    QRat acc;
    for (long j = 0; j <= k; ++j) {
        QRat term = QRat(BigRat(binomial(k + n, k - j))) * QRat(gauss_binom(j + n, j));
        if ((k - j) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    QRat q_minus_1 = QRat::q() - QRat(1);
    return acc / q_minus_1.pow(k); // exact: the alternating sum carries (q-1)^k
}

std::vector<QRat> stirling1_row(long n) {
    if (n < 0) throw std::invalid_argument("stirling1_row: negative index");
    // Expand prod_{j=0..n-1} (X - [j]_q) in X with QRat coefficients.
    std::vector<QRat> coeff{QRat(1)};
    for (long j = 0; j < n; ++j) {
        const QRat root = q_int(j);
        std::vector<QRat> next(coeff.size() + 1);
        for (size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] += coeff[i];
            next[i] -= root * coeff[i];
        }
        coeff = std::move(next);
    }
    return coeff;
}

QRat stirling1(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling1: negative index");
    if (k > n) return QRat();
    return stirling1_row(n)[static_cast<size_t>(k)];
}

QRat stirling1_closed(long n, long j) {
    if (n < 0 || j < 0 || j > n)
        throw std::invalid_argument("stirling1_closed: need 0 <= j <= n");
    QRat acc;
    for (long k = j; k <= n; ++k) {
        QRat term = QRat::q_pow(choose2(k + 1) - n * k) * QRat(gauss_binom(n, k)) *
                    QRat(BigRat(binomial(k, j)));
        if ((n - k) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    QRat q_minus_1 = QRat::q() - QRat(1);
    return QRat::q_pow(choose2(n)) * acc / q_minus_1.pow(n - j);
}

} // namespace qcalc
