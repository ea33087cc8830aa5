#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"

using namespace qcalc;

namespace {
const QRat kQ = QRat::q();
QRat qp(long e) { return QRat::q_pow(e); }
} // namespace

TEST_CASE("q-integers") {
    CHECK(q_int(3) == QRat(QPoly{BigRat(1), BigRat(1), BigRat(1)}));
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == QRat(1));
    CHECK(q_int(-1) == QRat(-1) / kQ);
    // [-x] = -q^{-x} [x] for a few more points
    for (long x = 1; x <= 6; ++x)
        CHECK(q_int(-x) == QRat(-1) * qp(-x) * q_int(x));
}

TEST_CASE("q-factorial") {
    CHECK(q_factorial(0) == QPoly::one());
    CHECK(q_factorial(1) == QPoly::one());
    CHECK(q_factorial(2) == QPoly{BigRat(1), BigRat(1)});
    CHECK(q_factorial(3) == QPoly{BigRat(1), BigRat(2), BigRat(2), BigRat(1)});
}

TEST_CASE("gaussian binomial values") {
    for (long n = 0; n <= 8; ++n) {
        CHECK(gauss_binom(n, 0) == QPoly::one());
        CHECK(gauss_binom(n, n) == QPoly::one());
    }
    CHECK(gauss_binom(4, 2) ==
          QPoly{BigRat(1), BigRat(1), BigRat(2), BigRat(1), BigRat(1)});
    CHECK(gauss_binom(3, 5).is_zero());
    CHECK(gauss_binom(3, -1).is_zero());
    CHECK(QRat(gauss_binom(5, 2)).limit_q1() == BigRat(10));
}

TEST_CASE("partition enumeration oracle") {
    CHECK(gauss_binom_partition_oracle(6, 6) == QPoly::one());
    CHECK(gauss_binom_partition_oracle(4, 2) ==
          QPoly{BigRat(1), BigRat(1), BigRat(2), BigRat(1), BigRat(1)});
    for (long n = 0; n <= 7; ++n)
        CHECK(gauss_binom_partition_oracle(n, 0) == QPoly::one());
    for (long n = 0; n <= 9; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(gauss_binom(n, k) == gauss_binom_partition_oracle(n, k));
}

TEST_CASE("gaussian binomial recursion and symmetry") {
    for (long n = 0; n <= 9; ++n)
        for (long k = 0; k <= n + 1; ++k) {
            const QRat lhs(gauss_binom(n + 1, k));
            CHECK(lhs == QRat(gauss_binom(n, k - 1)) + qp(k) * QRat(gauss_binom(n, k)));
            CHECK(lhs ==
                  qp(n - k + 1) * QRat(gauss_binom(n, k - 1)) + QRat(gauss_binom(n, k)));
        }
    for (long n = 0; n <= 9; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(gauss_binom(n, k) == gauss_binom(n, n - k));
}

TEST_CASE("q-falling factorial") {
    CHECK(q_falling(5, 0) == QRat(1));
    CHECK(q_falling(2, 3).is_zero());
    CHECK(q_falling(0, 1).is_zero());
    const QRat expected = QRat(q_int_poly(3)) * QRat(q_int_poly(2));
    CHECK(q_falling(3, 2) == expected);
    CHECK(q_falling(3, 2) == QRat(gauss_binom(3, 2)) * QRat(q_factorial(2)));
    // binom(x,k)_q = [x]_{k,q}/[k]_q! pointwise
    for (long x = 0; x <= 7; ++x)
        for (long k = 0; k <= 7; ++k)
            CHECK(QRat(gauss_binom(x, k)) == q_falling(x, k) / QRat(q_factorial(k)));
}

TEST_CASE("q-difference operator") {
    CHECK(delta_q(0, {QRat(7)}) == QRat(7));
    CHECK(delta_q(1, {q_int(0), q_int(1)}) == QRat(1));
    CHECK(delta_q(2, {QRat(1), QRat(1), QRat(1)}).is_zero());
    CHECK_THROWS_AS(delta_q(2, {QRat(1), QRat(1)}), ArityError);
}

TEST_CASE("finite q-binomial product") {
    CHECK(q_binom_product(0, BigRat(5), BigRat(7)) == QPoly::one());
    CHECK(q_binom_product(2, BigRat(1), BigRat(1)) == QPoly{BigRat(2), BigRat(2)});
    CHECK(q_binom_product(3, BigRat(1), BigRat(-1)).is_zero());
    // The a^{n-k} form of the expansion, at one rational pair.
    const BigRat a = make_rat(2, 3), b = make_rat(-1, 2);
    for (long n = 0; n <= 6; ++n) {
        QRat rhs;
        for (long k = 0; k <= n; ++k)
            rhs += QRat(gauss_binom(n, k)) * qp(choose2(k)) *
                   QRat(rat_pow(a, n - k) * rat_pow(b, k));
        CHECK(QRat(q_binom_product(n, a, b)) == rhs);
    }
}

TEST_CASE("infinite q-binomial series") {
    CHECK(q_binom_series(1, 1, SeriesSign::plus, 4).coeffs() ==
          std::vector<BigRat>{BigRat(1), BigRat(1), BigRat(1), BigRat(1)});
    CHECK(q_binom_series(1, 1, SeriesSign::minus, 4).coeffs() ==
          std::vector<BigRat>{BigRat(1), BigRat(-1), BigRat(1), BigRat(-1)});
    // 1/((1+q)(1+q^2)) via the explicit product inverse
    const QPoly den = QPoly{BigRat(1), BigRat(1)} *
                      QPoly{BigRat(1), BigRat(0), BigRat(1)};
    CHECK(q_binom_series(2, 1, SeriesSign::minus, 12) ==
          QRat(QPoly::one(), den).to_series(12));
    CHECK_THROWS_AS(q_binom_series(1, 0, SeriesSign::plus, 4), SeriesDomainError);
    CHECK_THROWS_AS(q_binom_series(0, 1, SeriesSign::plus, 4), SeriesDomainError);
}

TEST_CASE("shift rule and qpow expansion") {
    for (long n = 1; n <= 6; ++n)
        for (long x = 1; x <= 6; ++x)
            CHECK(qp(n) * q_int(x - n) == q_int(x) - q_int(n));
    for (long l = 0; l <= 5; ++l)
        for (long x = 0; x <= 5; ++x) {
            QRat rhs;
            for (long m = 0; m <= l; ++m)
                rhs += QRat(BigRat(binomial(l, m))) * (kQ - QRat(1)).pow(m) *
                       QRat(q_int_poly(x)).pow(m);
            CHECK(qp(l * x) == rhs);
        }
}

TEST_CASE("newton expansion of [x]^m") {
    for (long m = 0; m <= 4; ++m)
        for (long x = 0; x <= m + 2; ++x) {
            QRat rhs;
            for (long n = 0; n <= x; ++n) {
                std::vector<QRat> f;
                for (long j = 0; j <= n; ++j) f.push_back(QRat(q_int_poly(j)).pow(m));
                rhs += QRat(gauss_binom(x, n)) * delta_q(n, f);
            }
            CHECK(QRat(q_int_poly(x)).pow(m) == rhs);
        }
}
