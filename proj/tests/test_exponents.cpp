#include <doctest.h>

#include <random>

#include "mikado/error.hpp"
#include "mikado/exponents.hpp"

using namespace mikado;

namespace {

Exponent E(const char* s) { return Exponent::parse(s); }

}  // namespace

TEST_CASE("rational parsing and arithmetic are exact") {
    CHECK(Rational::parse("1.1") == Rational(11, 10));
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1, 3) < Rational(34, 100));
    for (const char* bad : {"", "abc", "1/0", "1..2", "1/", "--1"}) CHECK_THROWS_AS(Rational::parse(bad), InvalidArgument);
    CHECK(E("inf").is_infinite());
    CHECK(E("oo").is_infinite());
    CHECK(E("inf").reciprocal() == Rational(0));
    CHECK(E("2") < E("inf"));
}

TEST_CASE("dual exponent") {
    CHECK(dual_exponent(E("2")) == E("2"));
    CHECK(dual_exponent(E("1")).is_infinite());
    CHECK(dual_exponent(E("inf")) == E("1"));
    CHECK(dual_exponent(E("4")) == E("4/3"));
    CHECK_THROWS_AS(dual_exponent(E("1/2")), InvalidArgument);
    for (int a = 1; a <= 40; ++a) {
        for (int b = 1; b <= a; ++b) {
            const Exponent p(Rational(a, b));
            CHECK(dual_exponent(dual_exponent(p)) == p);
            CHECK(p.reciprocal() + dual_exponent(p).reciprocal() == Rational(1));
        }
    }
}

TEST_CASE("regime labels on worked cases") {
    CHECK(classify_regime(E("2"), E("2"), 3, 3) == Regime::UniqueDiPernaLions);
    CHECK(classify_regime(E("2"), E("1.1"), 3, 3) == Regime::NonuniqueTheorem);
    CHECK(classify_regime(E("2"), E("1.3"), 3, 3) == Regime::OpenGap);
    CHECK(classify_regime(E("inf"), E("1"), 3, 3) == Regime::ExcludedEndpoint);
    CHECK(classify_regime(E("2"), E("inf"), 3, 2) == Regime::ExcludedEndpoint);
    // Equality on the critical surface stays open: 1/2 + 1/(6/5) = 4/3 = 1 + 1/3.
    CHECK(classify_regime(E("2"), E("6/5"), 3, 3) == Regime::OpenGap);
    CHECK(to_string(Regime::NonuniqueTheorem) == "NONUNIQUE_THEOREM");
    CHECK_THROWS_AS(classify_regime(E("2"), E("2"), 1, 1), InvalidArgument);
    CHECK_THROWS_AS(classify_regime(E("2"), E("2"), 3, 1), InvalidArgument);
    CHECK_THROWS_AS(classify_regime(E("0.9"), E("2"), 3, 3), InvalidArgument);
}

TEST_CASE("D = 1 never reaches the non-uniqueness label") {
    for (int a = 1; a <= 30; ++a) {
        for (int b = 1; b <= 30; ++b) {
            CHECK(classify_regime(Exponent(Rational(a + 10, 10)), Exponent(Rational(b + 10, 10)), 2, 1) !=
                  Regime::NonuniqueTheorem);
        }
    }
    CHECK(classify_regime(E("1"), E("1"), 2, 1) == Regime::OpenGap);
}

TEST_CASE("exponent plans") {
    const ExponentPlan a = exponent_plan(E("2"), E("1.1"), 3, 3);
    CHECK(a.alpha == Rational(3, 2));
    CHECK(a.beta == Rational(3, 2));
    CHECK(a.c == Rational(5, 22));
    CHECK(a.admissible);

    const ExponentPlan b = exponent_plan(E("1.5"), E("1.1"), 2, 2);
    CHECK(b.alpha == Rational(4, 3));
    CHECK(b.beta == Rational(2, 3));
    CHECK(b.c == Rational(5, 33));
    const SlopeTable s = predicted_slopes(b);
    CHECK(s.theta_lp == 0.0);
    CHECK(s.w_lp_dual == 0.0);
    CHECK(s.dw_lp_tilde == doctest::Approx(-5.0 / 33.0));
    CHECK(s.theta_l1 == doctest::Approx(-2.0 / 3.0));

    for (int D = 2; D <= 4; ++D) {
        const ExponentPlan e = exponent_plan(E("1"), E("1"), D, D);
        CHECK(e.beta == Rational(0));
        CHECK(e.c == Rational(D - 1));
    }

    const ExponentPlan boundary = exponent_plan(E("3/2"), E("3"), 2, 2);
    CHECK(boundary.c == Rational(-1));
    CHECK_FALSE(boundary.admissible);
    CHECK(predicted_slopes(boundary).dw_lp_tilde == doctest::Approx(1.0));

    // Pure rescaling without amplitude compensation.
    const SlopeTable raw = predicted_slopes(with_amplitudes(b, Rational(0), Rational(0)));
    CHECK(raw.theta_lp == doctest::Approx(-2.0 / 1.5));
    CHECK(raw.w_lp_dual == doctest::Approx(-2.0 / 3.0));
    CHECK(raw.dw_lp_tilde == doctest::Approx(1.0 - 2.0 / 1.1));
    CHECK(raw.theta_l1 == doctest::Approx(-2.0));
}

TEST_CASE("diffusion side condition") {
    CHECK(diffusion_admissible(E("2"), 3));
    CHECK_FALSE(diffusion_admissible(E("1"), 3));
    CHECK_FALSE(diffusion_admissible(E("3/2"), 3));
    CHECK(diffusion_admissible(E("inf"), 2));
}

TEST_CASE("plan invariants over a dense rational grid") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(10, 400);
    for (int trial = 0; trial < 3000; ++trial) {
        const int d = 2 + trial % 3;
        const int D = d - (trial / 3) % 2;
        const Exponent p(Rational(num(rng), 10));
        const Exponent pt(Rational(num(rng), 10));
        const ExponentPlan plan = exponent_plan(p, pt, d, D);
        CHECK(plan.alpha + plan.beta == Rational(D));
        CHECK(plan.c == Rational(D) * (p.reciprocal() + pt.reciprocal() - Rational(1)) - Rational(1));
        CHECK((plan.c > Rational(0)) == (plan.regime == Regime::NonuniqueTheorem));
        CHECK(plan.admissible == (plan.regime == Regime::NonuniqueTheorem));
        // c strictly decreases in p~ and in p.
        const Exponent pt2(pt.value() + Rational(1, 10));
        const Exponent p2(p.value() + Rational(1, 10));
        CHECK(exponent_plan(p, pt2, d, D).c < plan.c);
        CHECK(exponent_plan(p2, pt, d, D).c < plan.c);
    }
}
