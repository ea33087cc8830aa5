#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/classical.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qstirling.hpp"

using namespace qcalc;

namespace {
const QRat kQ = QRat::q();
} // namespace

TEST_CASE("second kind, alternating-sum form") {
    for (long n = 0; n <= 8; ++n) CHECK(stirling2_s(n, n) == QRat(1));
    CHECK(stirling2_s(3, 2) == QRat(QPoly{BigRat(2), BigRat(1)}));
    CHECK(stirling2_s(3, 2).limit_q1() == BigRat(3));
    for (long k = 1; k <= 6; ++k) CHECK(stirling2_s(0, k).is_zero());
    for (long k = 1; k <= 6; ++k) CHECK(stirling2_s(k - 1, k).is_zero());
}

TEST_CASE("second kind, difference-operator form") {
    CHECK(stirling2_delta(1, 1) == QRat(1));
    CHECK(stirling2_delta(2, 2) == QRat(1));
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= 8; ++k)
            CHECK(stirling2_delta(n, k) == stirling2_s(n, k));
}

TEST_CASE("second kind, bivariate convention") {
    CHECK(stirling2_c(1, 1) == QRat(1));
    CHECK(stirling2_c(2, 1) == QRat(QPoly{BigRat(2), BigRat(1)}));
    for (long k = 0; k <= 6; ++k) CHECK(stirling2_c(k, 0) == QRat(1));
    // The convention bridge that reconciles the two families.
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= 6; ++k)
            CHECK(stirling2_c(n, k) == stirling2_s(n + k, n));
}

TEST_CASE("first kind by product expansion") {
    for (long n = 0; n <= 8; ++n) CHECK(stirling1(n, n) == QRat(1));
    CHECK(stirling1(2, 1) == QRat(-1));
    CHECK(stirling1(2, 0).is_zero());
    CHECK(stirling1(3, 2) == QRat(QPoly{BigRat(-2), BigRat(-1)}));
    CHECK(stirling1(3, 1) == QRat(QPoly{BigRat(1), BigRat(1)}));
    CHECK(stirling1(3, 2).limit_q1() == BigRat(-3));
    CHECK(stirling1(3, 1).limit_q1() == BigRat(2));
    CHECK(stirling1(4, 7).is_zero());
}

TEST_CASE("first kind closed form") {
    CHECK(stirling1_closed(2, 1) == QRat(-1));
    for (long n = 0; n <= 6; ++n) CHECK(stirling1_closed(n, n) == QRat(1));
    CHECK(stirling1_closed(3, 2) == QRat(QPoly{BigRat(-2), BigRat(-1)}));
    for (long n = 0; n <= 8; ++n)
        for (long j = 0; j <= n; ++j)
            CHECK(stirling1_closed(n, j) == stirling1(n, j));
}

TEST_CASE("first kind connects falling factorials and powers") {
    for (long n = 0; n <= 6; ++n)
        for (long x = 0; x <= n + 2; ++x) {
            const QRat lhs = QRat::q_pow(choose2(n)) * q_falling(x, n);
            QRat rhs;
            const auto row = stirling1_row(n);
            for (long k = 0; k <= n; ++k)
                rhs += row[static_cast<size_t>(k)] * QRat(q_int_poly(x)).pow(k);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("binomial recovered with exact q-cancellation") {
    for (long n = 0; n <= 7; ++n)
        for (long m = 0; m <= n; ++m) {
            QRat rhs;
            for (long k = m; k <= n; ++k)
                rhs += (kQ - QRat(1)).pow(k - m) * QRat(gauss_binom(n, k)) *
                       stirling1(k, m);
            CHECK(rhs == QRat(BigRat(binomial(n, m))));
        }
}

TEST_CASE("classical limits of both kinds") {
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(stirling2_s(n, k).limit_q1() == BigRat(classical_stirling2(n, k)));
            CHECK(stirling1(n, k).limit_q1() ==
                  BigRat(classical_stirling1_signed(n, k)));
        }
}
