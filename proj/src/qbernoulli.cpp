#include "qcalc/qbernoulli.hpp"

#include "qcalc/qcore.hpp"

#include <stdexcept>

namespace qcalc {

std::vector<QRat> carlitz_beta_seq(long m) {
    if (m < 0) throw std::invalid_argument("carlitz_beta_seq: negative index");
    std::vector<QRat> beta;
    beta.reserve(static_cast<size_t>(m) + 1);
    beta.push_back(QRat(1));
    for (long k = 1; k <= m; ++k) {
        QRat rhs = (k == 1) ? QRat(1) : QRat();
        QRat acc;
        for (long i = 0; i < k; ++i)
            acc += QRat(BigRat(binomial(k, i))) * QRat::q_pow(i) * beta[static_cast<size_t>(i)];
        rhs -= QRat::q() * acc;
        beta.push_back(rhs / (QRat::q_pow(k + 1) - QRat(1)));
    }
    return beta;
}

QRat carlitz_beta(long m) { return carlitz_beta_seq(m).back(); }

QRat moment_bosonic(long n) {
    if (n < 0) throw std::invalid_argument("moment_bosonic: negative index");
    return QRat(BigRat(n + 1)) / QRat(q_int_poly(n + 1));
}

QRat moment_fermionic(long n) {
    if (n < 0) throw std::invalid_argument("moment_fermionic: negative index");
    QPoly den = QPoly::one() + QPoly::monomial(static_cast<int>(n + 1));
    return QRat(q_int_poly(2)) / QRat(den);
}

namespace {

void check_beta_args(long n, long k, long x, const char* who) {
    if (n < 0 || x < 0 || k < 1)
        throw std::invalid_argument(std::string(who) + ": need n, x >= 0 and k >= 1");
}

QRat one_minus_q_pow(long n) {
    return (QRat(1) - QRat::q()).pow(n);
}

} // namespace

QRat beta_order(long n, long k, long x) {
    check_beta_args(n, k, x, "beta_order");
    QRat acc;
    for (long i = 0; i <= n; ++i) {
        QRat prod(1);
        for (long j = 1; j <= k; ++j)
            prod *= QRat(BigRat(i + j)) / QRat(q_int_poly(i + j));
        QRat term = QRat(BigRat(binomial(n, i))) * QRat::q_pow(i * x) * prod;
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc / one_minus_q_pow(n);
}

QRat beta_order_alt(long n, long k, long x) {
    check_beta_args(n, k, x, "beta_order_alt");
    const QRat kfac_ratio = QRat(BigRat(factorial(static_cast<unsigned long>(k)))) /
                            QRat(q_factorial(k));
    QRat acc;
    for (long i = 0; i <= n; ++i) {
        QRat term = QRat(BigRat(binomial(n, i))) *
                    QRat(BigRat(binomial(i + k, k))) / QRat(gauss_binom(i + k, k)) *
                    kfac_ratio * QRat::q_pow(i * x);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc / one_minus_q_pow(n);
}

QRat beta_neg_order(long n, long k, long x) {
    check_beta_args(n, k, x, "beta_neg_order");
    const QRat qfac_ratio = QRat(q_factorial(k)) /
                            QRat(BigRat(factorial(static_cast<unsigned long>(k))));
    QRat acc;
    for (long i = 0; i <= n; ++i) {
        QRat term = QRat(BigRat(binomial(n, i))) * QRat::q_pow(i * x) *
                    QRat(gauss_binom(i + k, k)) / QRat(BigRat(binomial(i + k, k))) *
                    qfac_ratio;
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc / one_minus_q_pow(n);
}

QRat beta_neg_order_alt(long n, long k, long x) {
    check_beta_args(n, k, x, "beta_neg_order_alt");
    const QRat qfac_ratio = QRat(q_factorial(k)) /
                            QRat(BigRat(factorial(static_cast<unsigned long>(k))));
    const BigRat denom(binomial(n + k, k));
    QRat acc;
    for (long i = 0; i <= n; ++i) {
        QRat term = QRat(gauss_binom(i + k, k)) *
                    QRat(make_rat(binomial(n + k, n - i), Int(denom))) *
                    qfac_ratio * QRat::q_pow(i * x);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc / one_minus_q_pow(n);
}

QRat euler_order(long k, long n, long x) {
    if (k < 0 || x < 0 || n < 1)
        throw std::invalid_argument("euler_order: need k, x >= 0 and n >= 1");
    QRat acc;
    for (long l = 0; l <= k; ++l) {
        QPoly den = QPoly::one();
        for (long j = 1; j <= n; ++j)
            den = den * (QPoly::one() + QPoly::monomial(static_cast<int>(l + j)));
        QRat term = QRat(BigRat(binomial(k, l))) * QRat::q_pow(l * x) / QRat(den);
        if (l % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return QRat(q_int_poly(2)).pow(n) * acc / one_minus_q_pow(k);
}

QRat euler_neg_order(long k, long n, long x) {
    if (k < 0 || x < 0 || n < 1)
        throw std::invalid_argument("euler_neg_order: need k, x >= 0 and n >= 1");
    QRat acc;
    for (long l = 0; l <= k; ++l) {
        QPoly prod = QPoly::one();
        for (long i = 1; i <= n; ++i)
            prod = prod * (QPoly::one() + QPoly::monomial(static_cast<int>(l + i)));
        QRat term = QRat(BigRat(binomial(k, l))) * QRat::q_pow(l * x) * QRat(prod);
        if (l % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc / (one_minus_q_pow(k) * QRat(q_int_poly(2)).pow(n));
}

QRat euler_neg_order_sum(long k, long n, long x) {
    if (k < 0 || x < 0 || n < 1)
        throw std::invalid_argument("euler_neg_order_sum: need k, x >= 0 and n >= 1");
    QRat acc;
    for (long l = 0; l <= k; ++l) {
        QRat inner;
        for (long i = 0; i <= n; ++i)
            inner += QRat(gauss_binom(n, i)) * QRat::q_pow(choose2(i) + (l + 1) * i);
        QRat term = QRat(BigRat(binomial(k, l))) * QRat::q_pow(l * x) * inner;
        if (l % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc / (one_minus_q_pow(k) * QRat(q_int_poly(2)).pow(n));
}

Prop6Witness prop6_check(long k, long n, long x, int order) {
    if (k < 0 || x < 0 || n < 1 || order < 1)
        throw std::invalid_argument("prop6_check: need k, x >= 0, n >= 1, order >= 1");
    Prop6Witness w{false, QSeries(order), QSeries(order)};
    w.lhs = euler_order(k, n, x).to_series(order);

    // [2]^n/(1-q)^k * sum_l C(k,l)(-1)^l q^{lx}
    //   * sum_i binom(n+i-1, i)_q (-1)^i q^{(l+1)i}
    QSeries bracket(order);
    for (long l = 0; l <= k; ++l) {
        QSeries inner = q_binom_series(n, l + 1, SeriesSign::minus, order);
        QSeries term = (inner * BigRat(binomial(k, l))).shift(static_cast<int>(l * x));
        if (l % 2 == 0)
            bracket += term;
        else
            bracket += -term;
    }
    const QRat prefactor = QRat(q_int_poly(2)).pow(n) / (QRat(1) - QRat::q()).pow(k);
    w.rhs = prefactor.to_series(order) * bracket;
    w.equal = (w.lhs == w.rhs);
    return w;
}

} // namespace qcalc
