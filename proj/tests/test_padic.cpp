#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/errors.hpp"
#include "qcalc/padic.hpp"
#include "qcalc/qbernoulli.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/volkenborn.hpp"

#include <random>

using namespace qcalc;

TEST_CASE("construction from rationals") {
    const PadicNum a = PadicNum::from_rational(BigRat(10), 5, 4);
    CHECK(a.valuation() == 1);
    CHECK(a.unit() == 2);
    CHECK(a.unit_precision() == 4);

    const PadicNum b = PadicNum::from_rational(make_rat(1, 2), 5, 2);
    CHECK(b.valuation() == 0);
    CHECK(b.unit() == 13); // 2 * 13 = 26 = 1 (mod 25)

    const PadicNum z = PadicNum::from_rational(BigRat(0), 5, 4);
    CHECK(z.is_exact_zero());

    const PadicNum neg_val = PadicNum::from_rational(make_rat(3, 25), 5, 3);
    CHECK(neg_val.valuation() == -2);

    CHECK_THROWS_AS(PadicNum::from_rational(BigRat(1), 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(PadicNum::from_rational(BigRat(1), 9, 3), std::invalid_argument);
    CHECK_THROWS_AS(PadicNum::from_rational(BigRat(1), 5, 0), PrecisionExhausted);
}

TEST_CASE("arithmetic basics") {
    const PadicNum a = PadicNum::from_rational(BigRat(7), 5, 6);
    CHECK((a + (-a)).is_zero_ball());
    CHECK((a - a).valuation_lower_bound() == 6);

    const PadicNum x = PadicNum::from_parts(5, 1, Int(2), 4);
    const PadicNum y = PadicNum::from_parts(5, 0, Int(3), 4);
    const PadicNum xy = x * y;
    CHECK(xy.valuation() == 1);
    CHECK(xy.unit() == 6);

    const PadicNum half = PadicNum::from_rational(make_rat(1, 2), 5, 6);
    const PadicNum two = PadicNum::from_rational(BigRat(2), 5, 6);
    CHECK((half * two).same_value(PadicNum::one(5, 6)));
    CHECK((half * two).unit() == 1);

    CHECK_THROWS_AS(a / PadicNum::zero(5), DivisionByZero);
    CHECK_THROWS_AS(a / (a - a), DivisionByZero);
}

TEST_CASE("cancellation tracks precision") {
    // 1 + 5^3 and 1 agree through three digits; their difference is
    // certified at valuation 3 with reduced remaining precision.
    const PadicNum u = PadicNum::from_rational(BigRat(126), 5, 5);
    const PadicNum one = PadicNum::one(5, 5);
    const PadicNum d = u - one;
    CHECK(!d.is_zero_ball());
    CHECK(d.valuation() == 3);
    CHECK(d.unit_precision() == 2);
    CHECK(d.abs_precision() == 5);
}

TEST_CASE("from_rational is a ring homomorphism on samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 40);
    for (int trial = 0; trial < 60; ++trial) {
        const BigRat r = make_rat(num(rng), den(rng));
        const BigRat s = make_rat(num(rng), den(rng));
        const int prec = 6;
        const PadicNum pr = PadicNum::from_rational(r, 7, prec);
        const PadicNum ps = PadicNum::from_rational(s, 7, prec);
        CHECK((pr + ps).same_value(PadicNum::from_rational(r + s, 7, prec)));
        CHECK((pr * ps).same_value(PadicNum::from_rational(r * s, 7, prec)));
        if (s != 0 && mpz_divisible_ui_p(s.get_num().get_mpz_t(), 7) == 0)
            CHECK((pr / ps).same_value(PadicNum::from_rational(r / s, 7, prec)));
    }
}

TEST_CASE("ring laws at fixed precision") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> v(-60, 60);
    auto mk = [&](long x) { return PadicNum::from_rational(BigRat(x), 3, 8); };
    for (int trial = 0; trial < 50; ++trial) {
        const PadicNum a = mk(v(rng)), b = mk(v(rng)), c = mk(v(rng));
        CHECK(((a + b) + c).same_value(a + (b + c)));
        CHECK((a * b).same_value(b * a));
        CHECK((a * (b + c)).same_value(a * b + a * c));
    }
}

TEST_CASE("padic q validation") {
    CHECK_NOTHROW(PadicQ::from_offset(5, 1));
    CHECK_NOTHROW(PadicQ(5, BigRat(6)));
    CHECK_THROWS_AS(PadicQ(5, BigRat(3)), std::invalid_argument);  // q != 1 mod 5
    CHECK_THROWS_AS(PadicQ(5, BigRat(1)), std::invalid_argument);  // q = 1 excluded
    CHECK_THROWS_AS(PadicQ::from_offset(5, 0), std::invalid_argument);
    CHECK(PadicQ::from_offset(5, 1).one_minus_q_valuation() == 1);
    CHECK(PadicQ(5, BigRat(26)).one_minus_q_valuation() == 2);
}

TEST_CASE("measure normalization is exact at every level") {
    for (long p : {3L, 5L}) {
        const PadicQ q = PadicQ::from_offset(p, 1);
        for (int N = 1; N <= 4; ++N)
            for (Measure m : {Measure::bosonic, Measure::fermionic}) {
                const PadicNum v = volkenborn(IntegrandSpec::pow_q(0), q, N, m);
                CHECK(v.valuation() == 0);
                CHECK(v.unit() == 1);
            }
    }
}

TEST_CASE("coset masses sum to one and scale by q") {
    const PadicQ q = PadicQ::from_offset(5, 1);
    const int N = 2;
    PadicNum total = PadicNum::zero(5);
    for (long long j = 0; j < 25; ++j) total = total + coset_mass(j, q, N, Measure::bosonic);
    CHECK(total.same_value(PadicNum::one(5, total.unit_precision())));
    const PadicNum m0 = coset_mass(0, q, N, Measure::bosonic);
    const PadicNum m1 = coset_mass(1, q, N, Measure::bosonic);
    CHECK((m1 / m0).same_value(q.q_padic(4)));
}

TEST_CASE("riemann sums converge to the exact moments") {
    const PadicQ q = PadicQ::from_offset(5, 1);
    for (long n = 0; n <= 4; ++n) {
        const auto rows = convergence_probe(IntegrandSpec::q_exp(n), q, 2, 4,
                                            Measure::bosonic, moment_bosonic(n));
        for (const auto& row : rows) CHECK(row.valuation_lb >= row.N);
        const auto frows = convergence_probe(IntegrandSpec::q_exp(n), q, 2, 4,
                                             Measure::fermionic, moment_fermionic(n));
        for (const auto& row : frows) CHECK(row.valuation_lb >= row.N);
    }
}

TEST_CASE("riemann sums converge to the carlitz numbers") {
    const PadicQ q = PadicQ::from_offset(5, 1);
    for (long m = 0; m <= 3; ++m) {
        const auto rows = convergence_probe(IntegrandSpec::pow_q(m), q, 2, 5,
                                            Measure::bosonic, carlitz_beta(m));
        for (size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].valuation_lb >= rows[i - 1].valuation_lb);
        CHECK(rows.back().valuation_lb >= 3);
    }
}

TEST_CASE("constant reference probes read as exact zero differences") {
    const PadicQ q = PadicQ::from_offset(5, 1);
    const auto rows =
        convergence_probe(IntegrandSpec::pow_q(0), q, 1, 3, Measure::bosonic, QRat(1));
    for (const auto& row : rows) {
        CHECK(!row.exact);
        CHECK(row.valuation_lb >= 4);
    }
}

TEST_CASE("multivariate sums") {
    const PadicQ q3 = PadicQ::from_offset(3, 1);
    // One variable reduces to the univariate evaluator.
    const PadicNum multi1 =
        volkenborn_multi(IntegrandSpec::multi_exp(1, 2), q3, 2, Measure::bosonic);
    const PadicNum uni = volkenborn(IntegrandSpec::q_exp(2), q3, 2, Measure::bosonic);
    CHECK(multi1.same_value(uni));

    // Direct enumeration equals the factorized product.
    for (int N = 1; N <= 2; ++N) {
        const IntegrandSpec f = IntegrandSpec::multi_exp(2, 0);
        const PadicNum direct = volkenborn_multi(f, q3, N, Measure::bosonic);
        const PadicNum fact =
            volkenborn_multi(f, q3, N, Measure::bosonic, MultiMode::factorized);
        CHECK(direct.same_value(fact));
    }

    // Fermionic coupled integrand converges to the euler closed form.
    const QRat e11 = euler_order(1, 1, 0);
    const auto rows = convergence_probe(IntegrandSpec::multi_euler_pow(1, 1, 0), q3, 1, 3,
                                        Measure::fermionic, e11);
    for (const auto& row : rows) CHECK(row.valuation_lb >= row.N);
}

TEST_CASE("budgets are enforced") {
    const PadicQ q5 = PadicQ::from_offset(5, 1);
    CHECK_THROWS_AS(volkenborn(IntegrandSpec::pow_q(1), q5, 8, Measure::bosonic),
                    TermBudgetExceeded);
    const PadicQ q3 = PadicQ::from_offset(3, 1);
    CHECK_THROWS_AS(
        volkenborn_multi(IntegrandSpec::multi_exp(2, 0), q3, 6, Measure::bosonic),
        TermBudgetExceeded);
    CHECK_THROWS_AS(volkenborn(IntegrandSpec::multi_exp(2, 0), q5, 2, Measure::bosonic),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        volkenborn_multi(IntegrandSpec::pow_q(1), q5, 2, Measure::bosonic),
        std::invalid_argument);
}

TEST_CASE("digit rendering") {
    const PadicNum a = PadicNum::from_rational(BigRat(52), 5, 4);
    CHECK(a.to_string() == "2 + 2*5^2 + O(5^4)");
    CHECK(PadicNum::zero(5).to_string() == "0");
    CHECK(PadicNum::zero_ball(5, 3).to_string() == "O(5^3)");
}
