#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mikado/error.hpp"
#include "mikado/exponents.hpp"
#include "mikado/mikado.hpp"
#include "mikado/norms.hpp"
#include "mikado/spectral.hpp"
#include "support.hpp"

using namespace mikado;

namespace {

/// Composite Simpson rule for the radial integral |S^{D-1}| int_0^r0 f(r)^q r^{D-1} dr.
double simpson_radial(const BumpProfile& prof, double q, int D) {
    const int m = 20000;
    const double h = prof.radius / m;
    double acc = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double r = i * h;
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * std::pow(prof.value(r), q) * std::pow(r, D - 1);
    }
    const double sphere = D == 1 ? 2.0 : 2.0 * std::pow(std::numbers::pi, 0.5 * D) / std::tgamma(0.5 * D);
    return sphere * acc * h / 3.0;
}

MikadoSpec make_spec(MikadoVariant v, double p, int d, double mu, long lambda = 1) {
    MikadoSpec s;
    s.variant = v;
    s.profile.radius = 0.25;
    const int D = concentration_dimension(v, d);
    s.alpha = D / p;
    s.beta = D - s.alpha;
    s.mu = mu;
    s.lambda = lambda;
    return s;
}

double relative_divergence(const VectorField& w) {
    return lp_norm(divergence(w), 2.0, 0) / sobolev_seminorm(w, 2.0, 0);
}

}  // namespace

TEST_CASE("profile closed forms agree with Simpson quadrature") {
    for (ProfileKind kind : {ProfileKind::Polynomial, ProfileKind::Cosine}) {
        for (int order : {2, 4, 6}) {
            const BumpProfile prof{kind, order, 0.3, 1.7};
            for (int D = 1; D <= 4; ++D) {
                for (double q : {1.0, 1.5, 2.0, 3.0}) {
                    CHECK(prof.power_integral(q, D) == doctest::Approx(simpson_radial(prof, q, D)).epsilon(1e-8));
                }
            }
            CHECK(prof.lp_norm(kInfinity, 2) == 1.7);
        }
    }
    CHECK(BumpProfile{}.value(0.0) == 1.0);
    CHECK(BumpProfile{}.value(0.25) == 0.0);
    CHECK_THROWS_AS((BumpProfile{ProfileKind::Polynomial, 1, 0.2, 1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((BumpProfile{ProfileKind::Polynomial, 4, 0.5, 1.0}.validate()), InvalidArgument);
    CHECK(parse_profile_kind("cosine") == ProfileKind::Cosine);
    CHECK_THROWS_AS(parse_profile_kind("gauss"), InvalidArgument);
}

TEST_CASE("identity rescaling reproduces the profile maximum") {
    MikadoSpec tube = make_spec(MikadoVariant::Tube, 2.0, 3, 1.0);
    tube.alpha = 0.7;
    CHECK(testing::max_abs(build_theta(tube, {3, 32, 1, 0.0}).values()) == 1.0);

    MikadoSpec compact = make_spec(MikadoVariant::Compact, 2.0, 2, 1.0);
    compact.alpha = 0.3;
    // max of (1 - s^2)^4 (1 + s) on [0, 1] sits at s = 1/9.
    const double peak = std::pow(1.0 - 1.0 / 81.0, 4) * (10.0 / 9.0);
    CHECK(testing::max_abs(build_theta(compact, {2, 576, 1, 0.0}).values()) == doctest::Approx(peak).epsilon(1e-6));
}

TEST_CASE("norm scaling under concentration") {
    for (double p : {1.0, 1.5, 3.0}) {
        const auto c1 = make_spec(MikadoVariant::Compact, p, 2, 1.0);
        const auto c2 = make_spec(MikadoVariant::Compact, p, 2, 2.0);
        const GridSpec g2{2, 256, 1, 0.0};
        const double zero_amp = (c2.alpha - 2.0 / p);  // 0 with alpha = D/p
        CHECK(lp_norm(build_theta(c2, g2), p, 0) / lp_norm(build_theta(c1, g2), p, 0) ==
              doctest::Approx(std::pow(2.0, zero_amp)).epsilon(0.01));

        // Without amplitude compensation the ratio is 2^{-D/p}.
        auto r1 = c1, r2 = c2;
        r1.alpha = r2.alpha = 0.0;
        CHECK(lp_norm(build_theta(r2, g2), p, 0) / lp_norm(build_theta(r1, g2), p, 0) ==
              doctest::Approx(std::pow(2.0, -2.0 / p)).epsilon(0.01));

        auto t1 = make_spec(MikadoVariant::Tube, p, 3, 1.0), t2 = make_spec(MikadoVariant::Tube, p, 3, 2.0);
        t1.alpha = t2.alpha = 0.5;
        const GridSpec g3{3, 64, 1, 0.0};
        CHECK(lp_norm(build_theta(t2, g3), p, 0) / lp_norm(build_theta(t1, g3), p, 0) ==
              doctest::Approx(std::pow(2.0, 0.5 - 2.0 / p)).epsilon(0.01));
    }
}

TEST_CASE("derivative norm scaling of the compact field") {
    const double pt = 1.1;
    const auto s2 = make_spec(MikadoVariant::Compact, 1.5, 2, 2.0);
    const auto s4 = make_spec(MikadoVariant::Compact, 1.5, 2, 4.0);
    const GridSpec g{2, 256, 1, 0.0};
    const double ratio = sobolev_seminorm(build_w(s4, g), pt, 0) / sobolev_seminorm(build_w(s2, g), pt, 0);
    CHECK(ratio == doctest::Approx(std::pow(2.0, s2.beta + 1.0 - 2.0 / pt)).epsilon(0.02));
}

TEST_CASE("generated fields are divergence-free") {
    for (double mu : {1.0, 2.0, 4.0}) {
        for (long lambda : {1L, 2L}) {
            if (mu * static_cast<double>(lambda) > 4.0) continue;
            for (int j = 0; j < 3; ++j) {
                auto t = make_spec(MikadoVariant::Tube, 2.0, 3, mu, lambda);
                t.direction = j;
                CHECK(relative_divergence(build_w(t, {3, 64, 1, 0.0})) < 1e-10);
                auto c = make_spec(MikadoVariant::Compact, 2.0, 3, mu, lambda);
                c.direction = j;
                CHECK(relative_divergence(build_w(c, {3, 64, 1, 0.0})) < 1e-8);
            }
            auto c2 = make_spec(MikadoVariant::Compact, 1.5, 2, mu, lambda);
            c2.direction = 1;
            CHECK(relative_divergence(build_w(c2, {2, 128, 1, 0.0})) < 1e-8);
        }
    }
}

TEST_CASE("compact field at mu = lambda = 1 is the rotated gradient of the bump") {
    const auto s = make_spec(MikadoVariant::Compact, 2.0, 2, 1.0);
    const GridSpec g{2, 128, 1, 0.0};
    const VectorField w = build_w(s, g);
    // Analytic oracle: W = (d_2 phi, -d_1 phi) with phi = (1 - r^2/r0^2)^4.
    const double r0 = s.profile.radius;
    const auto grad = [&](const Point& x, int axis) {
        const double a = x[0] - std::round(x[0]), b = x[1] - std::round(x[1]);
        const double q = 1.0 - (a * a + b * b) / (r0 * r0);
        if (q <= 0.0) return 0.0;
        return 4.0 * q * q * q * (-2.0 * (axis == 0 ? a : b) / (r0 * r0));
    };
    const ScalarField w0 = ScalarField::sample(g, [&](double, const Point& x) { return grad(x, 1); });
    const ScalarField w1 = ScalarField::sample(g, [&](double, const Point& x) { return -grad(x, 0); });
    CHECK(testing::rel_l2(w[0].values(), w0.values()) < 1e-3);
    CHECK(testing::rel_l2(w[1].values(), w1.values()) < 1e-3);
}

TEST_CASE("interaction constant") {
    for (MikadoVariant v : {MikadoVariant::Compact, MikadoVariant::Tube}) {
        const int d = v == MikadoVariant::Compact ? 2 : 3;
        const GridSpec g{d, std::size_t(v == MikadoVariant::Compact ? 512 : 128), 1, 0.0};
        const double ref = reference_kappa(v, BumpProfile{ProfileKind::Polynomial, 4, 0.25, 1.0}, d);
        double k1 = 0.0;
        for (double mu : {1.0, 2.0, 4.0, 8.0}) {
            if (v == MikadoVariant::Tube && mu > 4.0) continue;
            const MikadoPair pair = build_pair(make_spec(v, 1.5, d, mu), g);
            if (mu == 1.0) {
                k1 = pair.kappa;
                CHECK(pair.kappa == doctest::Approx(ref).epsilon(1e-6));
            }
            CHECK(pair.kappa > 0.0);
            CHECK(pair.kappa == doctest::Approx(k1).epsilon(0.01));
            CHECK(interaction_mean(pair) == pair.kappa);
        }
    }
    // Disjoint supports: the theta of one bump against the field of another.
    const GridSpec g{2, 128, 1, 0.0};
    auto a = make_spec(MikadoVariant::Compact, 2.0, 2, 1.0);
    auto b = a;
    a.offset = {0.25, 0.25};
    b.offset = {0.75, 0.75};
    CHECK(std::abs(interaction_mean(build_theta(a, g), build_w(b, g), 0)) < 1e-15);
    CHECK_THROWS_AS(interaction_mean(build_theta(a, g), build_w(b, g), 2), InvalidArgument);
    CHECK_THROWS_AS(interaction_mean(build_theta(a, g), build_w(b, {2, 64, 1, 0.0}), 0), InvalidArgument);
}

TEST_CASE("norms do not depend on the oscillation frequency") {
    const GridSpec g{2, 512, 1, 0.0};
    const auto base = make_spec(MikadoVariant::Compact, 1.5, 2, 2.0, 1);
    const ScalarField t1 = build_theta(base, g);
    const VectorField w1 = build_w(base, g);
    for (long lambda : {2L, 3L, 4L}) {
        auto s = base;
        s.lambda = lambda;
        const ScalarField t = build_theta(s, g);
        const VectorField w = build_w(s, g);
        for (double p : {1.0, 1.5, 3.0}) {
            CHECK(lp_norm(t, p, 0) == doctest::Approx(lp_norm(t1, p, 0)).epsilon(1e-3));
            CHECK(lp_norm(w, p, 0) == doctest::Approx(lp_norm(w1, p, 0)).epsilon(1e-3));
        }
    }
}

TEST_CASE("resolution and argument errors") {
    auto s = make_spec(MikadoVariant::Compact, 2.0, 2, 8.0, 2);
    CHECK(required_resolution(s) == 256);
    try {
        build_theta(s, {2, 128, 1, 0.0});
        FAIL("expected a resolution error");
    } catch (const ResolutionError& e) {
        CHECK(e.required_n() == 256);
        CHECK(std::string(e.what()).find("256") != std::string::npos);
    }
    CHECK_NOTHROW(build_theta(s, {2, 256, 1, 0.0}));
    auto c4 = make_spec(MikadoVariant::Compact, 2.0, 4, 1.0);
    CHECK_THROWS_AS(build_w(c4, {4, 16, 1, 0.0}), InvalidArgument);
    auto bad = s;
    bad.direction = 2;
    CHECK_THROWS_AS(build_theta(bad, {2, 256, 1, 0.0}), InvalidArgument);
    bad = s;
    bad.mu = 0.5;
    CHECK_THROWS_AS(build_theta(bad, {2, 256, 1, 0.0}), InvalidArgument);
    bad = s;
    bad.offset = {0.1};
    CHECK_THROWS_AS(build_theta(bad, {2, 256, 1, 0.0}), InvalidArgument);
}

TEST_CASE("blocks are repeated on every time slice") {
    const auto s = make_spec(MikadoVariant::Compact, 2.0, 2, 2.0);
    const ScalarField t = build_theta(s, {2, 64, 3, 1.0});
    const VectorField w = build_w(s, {2, 64, 3, 1.0});
    for (std::size_t k = 1; k < 3; ++k) {
        CHECK(testing::rel_l2(t.slice(k), t.slice(0)) == 0.0);
        CHECK(testing::rel_l2(w[1].slice(k), w[1].slice(0)) == 0.0);
    }
}

TEST_CASE("disjoint placement") {
    const int one[] = {2};
    CHECK(place_disjoint(one, 0.4, 3, MikadoVariant::Tube) == std::vector<std::vector<double>>{{0.0, 0.0, 0.0}});

    const int two[] = {0, 1};
    const auto c = place_disjoint(two, 0.1, 2, MikadoVariant::Compact);
    CHECK(c == std::vector<std::vector<double>>{{0.25, 0.25}, {0.75, 0.75}});
    CHECK_THROWS_AS(place_disjoint(two, 0.1, 2, MikadoVariant::Tube), PreconditionError);
    CHECK_THROWS_AS(place_disjoint(two, 0.36, 2, MikadoVariant::Compact), PreconditionError);

    // Pointwise product oracle on a fine grid, over several mu and lambda.
    const int three[] = {0, 1, 2};
    const auto offs = place_disjoint(three, 0.1, 3, MikadoVariant::Tube);
    const GridSpec g{3, 160, 1, 0.0};
    for (double mu : {1.0, 2.0}) {
        for (long lambda : {1L, 2L}) {
            std::vector<ScalarField> thetas;
            for (int j = 0; j < 3; ++j) {
                MikadoSpec s;
                s.variant = MikadoVariant::Tube;
                s.direction = j;
                s.profile.radius = 0.1;
                s.offset = offs[static_cast<std::size_t>(j)];
                s.mu = mu;
                s.lambda = lambda;
                thetas.push_back(build_theta(s, g));
                CHECK(testing::max_abs(thetas.back().values()) > 0.0);
            }
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) {
                    double m = 0.0;
                    for (std::size_t i = 0; i < g.points(); ++i) {
                        m = std::max(m, std::abs(thetas[a].values()[i] * thetas[b].values()[i]));
                    }
                    CHECK(m == 0.0);
                }
            }
        }
    }

    const auto c3 = place_disjoint(three, 0.28, 3, MikadoVariant::Compact);
    const GridSpec g3{3, 64, 1, 0.0};
    std::vector<ScalarField> bumps;
    for (int j = 0; j < 3; ++j) {
        MikadoSpec s;
        s.direction = j;
        s.profile.radius = 0.28;
        s.offset = c3[static_cast<std::size_t>(j)];
        bumps.push_back(build_theta(s, g3));
    }
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            double m = 0.0;
            for (std::size_t i = 0; i < g3.points(); ++i) m = std::max(m, std::abs(bumps[a].values()[i] * bumps[b].values()[i]));
            CHECK(m == 0.0);
        }
    }
}
