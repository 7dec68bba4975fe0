#include <doctest.h>

#include <omp.h>

#include <cstring>
#include <random>

#include "mikado/mikado.hpp"
#include "mikado/norms.hpp"
#include "mikado/parallel.hpp"
#include "mikado/reference.hpp"
#include "mikado/spectral.hpp"
#include "support.hpp"

using namespace mikado;

namespace {

struct Threads {
    int saved = omp_get_max_threads();
    explicit Threads(int n) { omp_set_num_threads(n); }
    ~Threads() { omp_set_num_threads(saved); }
};

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("FFT derivative matches the direct DFT reference") {
    std::mt19937_64 rng(101);
    for (int d = 1; d <= 3; ++d) {
        const std::size_t n = d == 3 ? 8 : 16;
        const GridSpec g{d, n, 1, 0.0};
        std::normal_distribution<double> nd;
        std::vector<double> raw(g.points());
        for (double& v : raw) v = nd(rng);  // full spectrum, Nyquist mode included
        const ScalarField f(g, raw);
        for (int axis = 0; axis < d; ++axis) {
            const auto ref = reference::partial(f.slice(0), d, n, axis);
            CHECK(testing::rel_l2(partial(f, axis).values(), ref) < 1e-12);
        }
    }
}

TEST_CASE("blocked norms and means match plain loops") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    const GridSpec g{2, 128, 1, 0.0};
    std::vector<double> raw(g.points());
    for (double& v : raw) v = nd(rng);
    const ScalarField f(g, raw);
    for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
        CHECK(lp_norm(f, p, 0) == doctest::Approx(reference::lp_norm(f.slice(0), p, g.cell_volume())).epsilon(1e-12));
    }
    CHECK(spatial_mean(f, 0) == doctest::Approx(reference::spatial_mean(f.slice(0), g.cell_volume())).epsilon(1e-10));
}

TEST_CASE("divergence matches the reference on a Mikado field") {
    const GridSpec g{2, 32, 1, 0.0};
    MikadoSpec spec;
    spec.profile.radius = 0.3;
    const VectorField w = build_w(spec, g);
    const auto ref = reference::divergence(w, 0);
    const ScalarField div = divergence(w);
    CHECK(testing::max_abs(ref) < 1e-12 * testing::max_abs(w[0].values()) * 32);
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(div.values()[i] - ref[i]) < 1e-11);
}

TEST_CASE("reductions return identical bits for any thread count") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd;
    std::vector<double> v(100003);
    for (double& x : v) x = nd(rng) * 1e3;
    const auto term = [&](std::size_t i) { return v[i] * v[i]; };
    double first = 0.0;
    double first_max = 0.0;
    for (int t : {1, 2, 3, 8}) {
        Threads guard(t);
        const double s = parallel::sum(v.size(), term);
        const double m = parallel::max(v.size(), term);
        if (t == 1) {
            first = s;
            first_max = m;
        }
        CHECK(same_bits(s, first));
        CHECK(same_bits(m, first_max));
    }
}

TEST_CASE("spectral kernels are reproducible across thread counts") {
    std::mt19937_64 rng(9);
    const GridSpec g{2, 64, 4, 1.0};
    const ScalarField f = ScalarField::sample(g, [&, t = testing::Trig(2, 8, 10, rng, true)](double s, const Point& x) {
        return (1.0 + s) * t.value(x);
    });
    std::vector<double> base;
    double base_norm = 0.0;
    for (int t : {1, 4}) {
        Threads guard(t);
        const VectorField r = antidivergence(f);
        const double norm = sobolev_seminorm(r, 1.5, 2);
        if (t == 1) {
            base.assign(r[0].values().begin(), r[0].values().end());
            base_norm = norm;
        } else {
            CHECK(testing::rel_l2(r[0].values(), base) < 1e-13);
            CHECK(norm == doctest::Approx(base_norm).epsilon(1e-13));
        }
    }
}
