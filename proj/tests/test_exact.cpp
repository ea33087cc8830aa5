#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qpoly.hpp"
#include "qcalc/qrat.hpp"
#include "qcalc/qseries.hpp"

#include <random>

using namespace qcalc;

namespace {

const QRat kQ = QRat::q();

QRat one_minus_q() { return QRat(1) - kQ; }

std::mt19937 rng(20240817);

QPoly random_poly(int max_deg, bool allow_zero) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (;;) {
        std::vector<BigRat> c;
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.push_back(BigRat(coeff(rng)));
        QPoly p(c);
        if (allow_zero || !p.is_zero()) return p;
    }
}

QRat random_qrat() { return QRat(random_poly(3, true), random_poly(2, false)); }

const std::vector<BigRat> kSamplePoints = {
    BigRat(2), BigRat(3), BigRat(-2), make_rat(1, 2), make_rat(5, 3), make_rat(-3, 4)};

} // namespace

TEST_CASE("qpoly basics") {
    QPoly p{BigRat(1), BigRat(0), BigRat(2)}; // 1 + 2q^2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1) == 0);
    CHECK(p.eval(BigRat(3)) == BigRat(19));
    CHECK((p - p).is_zero());
    CHECK(QPoly{BigRat(0)}.is_zero());

    QPoly a{BigRat(-1), BigRat(0), BigRat(0), BigRat(1)}; // q^3 - 1
    QPoly b{BigRat(-1), BigRat(1)};                       // q - 1
    auto [quo, rem] = a.divrem(b);
    CHECK(rem.is_zero());
    CHECK(quo == QPoly{BigRat(1), BigRat(1), BigRat(1)});
    CHECK(a.div_exact(b) == quo);
    CHECK_THROWS_AS(a.div_exact(QPoly{BigRat(1), BigRat(1)}), std::logic_error);

    CHECK(a.div_q_minus_one() == quo);
    CHECK_THROWS_AS(QPoly::one().div_q_minus_one(), std::logic_error);
}

TEST_CASE("qpoly gcd is monic and divides") {
    for (int trial = 0; trial < 60; ++trial) {
        QPoly a = random_poly(4, true);
        QPoly b = random_poly(4, true);
        QPoly g = QPoly::gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(g.leading() == 1);
        if (!a.is_zero()) CHECK(a.divrem(g).second.is_zero());
        if (!b.is_zero()) CHECK(b.divrem(g).second.is_zero());
    }
}

TEST_CASE("qrat arithmetic examples") {
    const QRat inv = QRat(1) / one_minus_q();
    CHECK(one_minus_q() * inv == QRat(1));

    const QRat a(QPoly{BigRat(1), BigRat(0), BigRat(-1)}); // 1 - q^2
    CHECK(a / one_minus_q() == QRat(1) + kQ);

    const QRat b = QRat(1) + QRat(-1) / (QRat(1) + kQ);
    CHECK(b == kQ / (QRat(1) + kQ));
    CHECK(b.eval(BigRat(2)) == make_rat(2, 3));

    CHECK_THROWS_AS(QRat(1) / QRat(), DivisionByZero);
    CHECK_THROWS_AS(QRat().inverse(), DivisionByZero);
}

TEST_CASE("qrat evaluation") {
    CHECK(q_int(3).eval(BigRat(2)) == BigRat(7));
    CHECK((QRat(1) / (QRat(1) + kQ)).eval(BigRat(1)) == make_rat(1, 2));
    const QRat beta2 = kQ / (QRat(q_int_poly(2)) * QRat(q_int_poly(3)));
    CHECK(beta2.eval(BigRat(1)) == make_rat(1, 6));
    CHECK_THROWS_AS((QRat(1) / one_minus_q()).eval(BigRat(1)), EvalAtPole);
}

TEST_CASE("limit at q = 1") {
    CHECK(q_int(5).limit_q1() == BigRat(5));
    const QRat r(QPoly{BigRat(1), BigRat(0), BigRat(0), BigRat(-1)},
                 QPoly{BigRat(1), BigRat(-1)}); // (1-q^3)/(1-q)
    CHECK(r.limit_q1() == BigRat(3));
    CHECK(QRat(gauss_binom(5, 2)).limit_q1() == BigRat(10));
    CHECK_THROWS_AS((QRat(1) / one_minus_q()).limit_q1(), PoleAtOne);
}

TEST_CASE("series expansion") {
    const QSeries s1 = (QRat(1) / (QRat(1) + kQ)).to_series(4);
    CHECK(s1.coeffs() == std::vector<BigRat>{BigRat(1), BigRat(-1), BigRat(1), BigRat(-1)});
    const QSeries s2 = (QRat(1) / one_minus_q()).to_series(3);
    CHECK(s2.coeffs() == std::vector<BigRat>{BigRat(1), BigRat(1), BigRat(1)});
    const QSeries s3 = ((QRat(1) + kQ) / (QRat(1) + kQ)).to_series(2);
    CHECK(s3.coeffs() == std::vector<BigRat>{BigRat(1), BigRat(0)});
    CHECK_THROWS_AS((QRat(1) / kQ).to_series(3), SeriesAtPole);
}

TEST_CASE("field axioms hold exactly at sampled points") {
    for (int trial = 0; trial < 40; ++trial) {
        const QRat a = random_qrat();
        const QRat b = random_qrat();
        const QRat c = random_qrat();
        const QRat sum = a + b;
        const QRat prod = a * b;
        const QRat dist = a * (b + c);
        for (const auto& q0 : kSamplePoints) {
            BigRat av, bv, cv;
            try {
                av = a.eval(q0);
                bv = b.eval(q0);
                cv = c.eval(q0);
            } catch (const EvalAtPole&) {
                continue;
            }
            CHECK(sum.eval(q0) == av + bv);
            CHECK(prod.eval(q0) == av * bv);
            CHECK(dist.eval(q0) == av * (bv + cv));
        }
    }
}

TEST_CASE("canonical form is a normal form") {
    for (int trial = 0; trial < 40; ++trial) {
        const QRat a = random_qrat();
        const QRat b = random_qrat();
        const bool zero_diff = (a - b).is_zero();
        CHECK(zero_diff == (a == b));
        // A value rebuilt from unreduced data lands in the same form.
        const QPoly junk = random_poly(2, false);
        const QRat rebuilt(a.num() * junk, a.den() * junk);
        CHECK(rebuilt == a);
        CHECK(rebuilt.num() == a.num());
        CHECK(rebuilt.den() == a.den());
    }
}

TEST_CASE("canonical invariants after arithmetic") {
    for (int trial = 0; trial < 40; ++trial) {
        const QRat a = random_qrat() + random_qrat() * random_qrat();
        if (a.is_zero()) {
            CHECK(a.den().is_one());
            continue;
        }
        CHECK(a.den().leading() == 1);
        CHECK(QPoly::gcd(a.num(), a.den()).degree() == 0);
    }
}

TEST_CASE("series respects multiplication") {
    for (int trial = 0; trial < 30; ++trial) {
        QRat a = random_qrat();
        QRat b = random_qrat();
        if (a.den().coeff(0) == 0 || b.den().coeff(0) == 0) continue;
        const int order = 10;
        CHECK((a * b).to_series(order) == a.to_series(order) * b.to_series(order));
    }
}

TEST_CASE("limit agrees with evaluation away from poles") {
    for (int trial = 0; trial < 40; ++trial) {
        const QRat a = random_qrat();
        if (a.den().eval(BigRat(1)) == 0) continue;
        CHECK(a.limit_q1() == a.eval(BigRat(1)));
    }
}

TEST_CASE("series reciprocal and shift") {
    QSeries g = QSeries::from_poly(QPoly{BigRat(1), BigRat(-1)}, 6); // 1 - q
    const QSeries inv = g.reciprocal();
    CHECK(inv.coeffs() == std::vector<BigRat>(6, BigRat(1)));
    CHECK((g * inv).coeff(0) == 1);
    CHECK((g * inv).coeff(3) == 0);
    CHECK(inv.shift(2).coeff(1) == 0);
    CHECK(inv.shift(2).coeff(2) == 1);
    CHECK_THROWS_AS(QSeries::from_poly(QPoly::monomial(1), 4).reciprocal(), SeriesAtPole);
}

TEST_CASE("canonical serialization") {
    CHECK(QRat().to_string() == "0");
    CHECK(QRat(1).to_string() == "1");
    CHECK(kQ.to_string() == "q");
    CHECK((QRat(-1) / (QRat(1) + kQ)).to_string() == "(-1)/(1 + q)");
    const QRat beta2 = kQ / (QRat(q_int_poly(2)) * QRat(q_int_poly(3)));
    CHECK(beta2.to_string() == "(q)/(1 + 2q + 2q^2 + q^3)");
    CHECK(QRat(gauss_binom(4, 2)).to_string() == "1 + q + 2q^2 + q^3 + q^4");
    // Rational scalars stay exact in the integer-normalized form.
    CHECK((QRat(q_int_poly(2)) / QRat(2)).to_string() == "(1 + q)/(2)");
    CHECK(q_int(-1).to_string() == "(-1)/(q)");
    CHECK((QRat(3) * kQ.pow(2)).to_latex() == "3q^{2}");
}
