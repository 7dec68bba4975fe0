#include "mikado/probe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mikado/error.hpp"
#include "mikado/iteration.hpp"
#include "mikado/parallel.hpp"

namespace mikado {

namespace {

/// Value at time t, linear between the two neighbouring slices.
double interpolate_time(const ScalarField& f, double t, const Point& x) {
    const GridSpec& g = f.spec();
    const double s = std::clamp(t / g.dt(), 0.0, static_cast<double>(g.nt - 1));
    const std::size_t k = std::min(static_cast<std::size_t>(s), g.nt - 2);
    const double w = s - static_cast<double>(k);
    return (1.0 - w) * interpolate(f, k, x) + w * interpolate(f, k + 1, x);
}

void velocity(const VectorField& u, double t, const Point& x, Point& v) {
    for (int a = 0; a < u.dim(); ++a) v[static_cast<std::size_t>(a)] = interpolate_time(u[a], t, x);
}

}  // namespace

double interpolate(const ScalarField& f, std::size_t slice, const Point& x) {
    const GridSpec& g = f.spec();
    const auto s = f.slice(slice);
    const int d = g.dim;
    const double n = static_cast<double>(g.n);
    std::array<std::size_t, kMaxDim> lo{}, hi{};
    std::array<double, kMaxDim> frac{};
    for (int a = 0; a < d; ++a) {
        double y = x[static_cast<std::size_t>(a)] * n;
        y -= n * std::floor(y / n);
        const double fl = std::floor(y);
        const auto i = static_cast<std::size_t>(fl) % g.n;
        lo[static_cast<std::size_t>(a)] = i;
        hi[static_cast<std::size_t>(a)] = (i + 1) % g.n;
        frac[static_cast<std::size_t>(a)] = y - fl;
    }
    double acc = 0.0;
    for (unsigned corner = 0; corner < (1u << d); ++corner) {
        double weight = 1.0;
        std::size_t index = 0;
        for (int a = 0; a < d; ++a) {
            const bool up = (corner >> a) & 1u;
            const auto ua = static_cast<std::size_t>(a);
            weight *= up ? frac[ua] : 1.0 - frac[ua];
            index = index * g.n + (up ? hi[ua] : lo[ua]);
        }
        if (weight != 0.0) acc += weight * s[index];
    }
    return acc;
}

ProbeReport lagrangian_probe(const VectorField& u, const ScalarField& rho, std::size_t particles, std::size_t rk_steps) {
    const GridSpec& g = rho.spec();
    require_same_grid(g, u.spec(), "lagrangian_probe");
    if (g.nt < 3) throw PreconditionError("lagrangian_probe needs Nt >= 3 time slices");
    if (!(g.t_end > 0.0)) throw PreconditionError("lagrangian_probe needs T > 0");
    if (particles == 0) throw InvalidArgument("lagrangian_probe: particle count must be positive");
    if (rk_steps == 0) throw InvalidArgument("lagrangian_probe: rk_steps must be positive");

    const int d = g.dim;
    auto per_axis = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(particles), 1.0 / d) + 1e-9));
    per_axis = std::clamp<std::size_t>(per_axis, 1, g.n);
    std::size_t count = 1;
    for (int a = 0; a < d; ++a) count *= per_axis;

    const ScalarField e = residual(rho, u, false);
    const double dt = g.t_end / static_cast<double>(rk_steps);
    const std::size_t last = g.nt - 1;

    ProbeReport rep;
    rep.particles = count;
    rep.defects.assign(count, 0.0);
    rep.bounds.assign(count, 0.0);
    parallel::for_each_index(count, [&](std::size_t pidx) {
        // Seed on the grid node nearest to the sub-lattice point.
        Point x{};
        std::size_t rest = pidx;
        std::size_t node = 0;
        std::array<std::size_t, kMaxDim> idx{};
        for (int a = d - 1; a >= 0; --a) {
            idx[static_cast<std::size_t>(a)] = (rest % per_axis) * g.n / per_axis;
            rest /= per_axis;
        }
        for (int a = 0; a < d; ++a) {
            node = node * g.n + idx[static_cast<std::size_t>(a)];
            x[static_cast<std::size_t>(a)] = static_cast<double>(idx[static_cast<std::size_t>(a)]) * g.h();
        }
        const double rho0 = rho.slice(0)[node];

        double integral = 0.0;
        double e_prev = std::abs(interpolate_time(e, 0.0, x));
        Point k1{}, k2{}, k3{}, k4{}, y{};
        for (std::size_t step = 0; step < rk_steps; ++step) {
            const double t = static_cast<double>(step) * dt;
            velocity(u, t, x, k1);
            for (int a = 0; a < d; ++a) y[a] = x[a] + 0.5 * dt * k1[a];
            velocity(u, t + 0.5 * dt, y, k2);
            for (int a = 0; a < d; ++a) y[a] = x[a] + 0.5 * dt * k2[a];
            velocity(u, t + 0.5 * dt, y, k3);
            for (int a = 0; a < d; ++a) y[a] = x[a] + dt * k3[a];
            velocity(u, t + dt, y, k4);
            for (int a = 0; a < d; ++a) x[a] += dt / 6.0 * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
            const double e_next = std::abs(interpolate_time(e, t + dt, x));
            integral += 0.5 * dt * (e_prev + e_next);
            e_prev = e_next;
        }
        rep.defects[pidx] = std::abs(interpolate(rho, last, x) - rho0);
        rep.bounds[pidx] = integral;
    });

    rep.max_defect = parallel::max(count, [&](std::size_t i) { return rep.defects[i]; });
    rep.mean_defect = parallel::sum(count, [&](std::size_t i) { return rep.defects[i]; }) / static_cast<double>(count);
    rep.mean_bound = parallel::sum(count, [&](std::size_t i) { return rep.bounds[i]; }) / static_cast<double>(count);
    return rep;
}

}  // namespace mikado
