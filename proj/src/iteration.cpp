#include "mikado/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mikado/error.hpp"
#include "mikado/norms.hpp"
#include "mikado/parallel.hpp"
#include "mikado/spectral.hpp"

namespace mikado {

namespace {

struct Exponents {
    double p, p_dual, p_tilde, c;
};

Exponents exponents_of(const ExponentPlan& plan) {
    return {plan.p.to_double(), plan.p_dual.to_double(), plan.p_tilde.to_double(), plan.c.to_double()};
}

std::vector<int> active_directions(const IterationConfig& config, int d) {
    if (!config.directions.empty()) return config.directions;
    std::vector<int> all(static_cast<std::size_t>(d));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

MikadoSpec block_spec(const IterationConfig& config, int direction, std::vector<double> offset, double mu, long lambda) {
    MikadoSpec spec;
    spec.variant = config.variant;
    spec.direction = direction;
    spec.profile = config.profile;
    spec.offset = std::move(offset);
    spec.alpha = config.plan.alpha.to_double();
    spec.beta = config.plan.beta.to_double();
    spec.mu = mu;
    spec.lambda = lambda;
    return spec;
}

double max_over_slices(std::size_t nt, const std::function<double(std::size_t)>& f) {
    double best = 0.0;
    for (std::size_t k = 0; k < nt; ++k) best = std::max(best, f(k));
    return best;
}

double max_abs(std::span<const double> v) {
    return parallel::max(v.size(), [&](std::size_t i) { return std::abs(v[i]); });
}

StateNorms measure(const ScalarField& rho, const VectorField& u, const ScalarField& e, const VectorField& r,
                   const ExponentPlan& plan) {
    const Exponents x = exponents_of(plan);
    const std::size_t nt = rho.spec().nt;
    StateNorms n;
    n.rho_lp = lp_norm_sup_time(rho, x.p);
    n.u_lp_dual = max_over_slices(nt, [&](std::size_t k) { return lp_norm(u, x.p_dual, k); });
    n.du_lp_tilde = max_over_slices(nt, [&](std::size_t k) { return sobolev_seminorm(u, x.p_tilde, k); });
    n.residual_l1 = max_over_slices(nt, [&](std::size_t k) { return lp_norm(e, 1.0, k); });
    n.residual_l2 = max_over_slices(nt, [&](std::size_t k) { return lp_norm(e, 2.0, k); });
    n.defect_l1 = max_over_slices(nt, [&](std::size_t k) { return lp_norm(r, 1.0, k); });
    return n;
}

}  // namespace

void Schedule::validate() const {
    if (lambda0 < 1) throw InvalidArgument("schedule: lambda0 must be a positive integer");
    if (growth < 2) throw InvalidArgument("schedule: growth must be an integer >= 2");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidArgument("schedule: gamma must be positive");
    if (!(delta_floor > 0.0 && delta_floor < 1.0)) throw InvalidArgument("schedule: delta_floor must lie in (0, 1)");
    if (q_max < 0) throw InvalidArgument("schedule: q_max must be >= 0");
}

long Schedule::lambda(int q) const {
    long v = lambda0;
    for (int i = 0; i < q; ++i) v *= growth;
    return v;
}

double Schedule::mu(int q) const { return std::pow(static_cast<double>(lambda(q)), gamma); }

ScalarField residual(const ScalarField& rho, const VectorField& u, bool diffusion) {
    require_same_grid(rho.spec(), u.spec(), "residual");
    ScalarField e = time_derivative(rho) + dot(u, gradient(rho));
    if (diffusion) e = e - laplacian(rho);
    return e;
}

Defect defect_from_residual(const ScalarField& e) {
    const GridSpec& g = e.spec();
    ScalarField centred = e;
    std::vector<double> drift(g.nt);
    for (std::size_t k = 0; k < g.nt; ++k) {
        drift[k] = spatial_mean(e, k);
        for (double& v : centred.slice(k)) v -= drift[k];
    }
    return Defect{antidivergence(centred), std::move(drift)};
}

AmplitudePair amplitudes(double r, double delta, double kappa) {
    const double b = std::sqrt((std::abs(r) + delta) / kappa);
    return {-r / (kappa * b), b};
}

void check_config(const IterationConfig& config, const GridSpec& grid) {
    grid.validate();
    config.schedule.validate();
    config.profile.validate();
    const ExponentPlan& plan = config.plan;
    if (plan.d != grid.dim) {
        throw InvalidArgument("plan dimension d = " + std::to_string(plan.d) + " does not match grid d = " +
                              std::to_string(grid.dim));
    }
    if (plan.D != concentration_dimension(config.variant, grid.dim)) {
        throw InvalidArgument("plan uses D = " + std::to_string(plan.D) + " but the " +
                              std::string(to_string(config.variant)) + " variant concentrates in D = " +
                              std::to_string(concentration_dimension(config.variant, grid.dim)));
    }
    if (grid.nt < 3) throw PreconditionError("iteration needs Nt >= 3 time slices");
    if (!config.allow_inadmissible) {
        if (!plan.admissible) {
            throw PreconditionError("plan (p = " + plan.p.to_string() + ", p~ = " + plan.p_tilde.to_string() +
                                    ") is inadmissible: regime " + std::string(to_string(plan.regime)));
        }
        if (!(config.schedule.gamma * plan.c.to_double() > 1.0)) {
            throw PreconditionError("schedule needs gamma * c > 1, got gamma = " + std::to_string(config.schedule.gamma) +
                                    ", c = " + plan.c.to_string());
        }
    }
    if (config.diffusion && !diffusion_admissible(plan.p, grid.dim)) {
        throw PreconditionError("diffusion requires p' < d; p' = " + plan.p_dual.to_string() +
                                ", d = " + std::to_string(grid.dim));
    }
}

std::vector<double> profile_constants(const IterationConfig& config, const GridSpec& grid) {
    const GridSpec flat = grid.spatial();
    const double pt = config.plan.p_tilde.to_double();
    std::vector<double> out;
    for (int j : active_directions(config, grid.dim)) {
        const VectorField w = build_w(block_spec(config, j, {}, 1.0, 1), flat);
        out.push_back(sobolev_seminorm(w, pt, 0));
    }
    return out;
}

IterationState make_state(ScalarField rho, VectorField u, const IterationConfig& config, int q) {
    require_same_grid(rho.spec(), u.spec(), "make_state");
    rho.require_finite("iteration density");
    u.require_finite("iteration velocity");
    ScalarField e = residual(rho, u, config.diffusion);
    Defect def = defect_from_residual(e);
    const StateNorms norms = measure(rho, u, e, def.field, config.plan);
    return IterationState{q,
                          std::move(rho),
                          std::move(u),
                          std::move(e),
                          std::move(def.field),
                          std::move(def.drift),
                          config.schedule.lambda(q),
                          config.schedule.mu(q),
                          norms};
}

IterationState perturbation_step(const IterationState& state, const IterationConfig& config, StepRecord* record) {
    const GridSpec& grid = state.rho.spec();
    check_config(config, grid);
    const int d = grid.dim;
    const long lambda = state.lambda;
    const double mu = state.mu;
    const std::vector<int> dirs = active_directions(config, d);
    const auto offsets = place_disjoint(dirs, config.profile.radius, d, config.variant);

    StepRecord rec;
    rec.q = state.q;
    rec.lambda = lambda;
    rec.mu = mu;
    rec.before = state.norms;

    // Largest defect entry per slice over the corrected components.
    std::vector<double> slice_max(grid.nt, 0.0);
    for (std::size_t k = 0; k < grid.nt; ++k) {
        for (int j : dirs) slice_max[k] = std::max(slice_max[k], max_abs(state.defect[j].slice(k)));
    }
    if (*std::max_element(slice_max.begin(), slice_max.end()) <= config.suppress_below) {
        rec.suppressed = true;
        rec.after = state.norms;
        if (record) *record = rec;
        IterationState next = state;
        next.q = state.q + 1;
        next.lambda = config.schedule.lambda(next.q);
        next.mu = config.schedule.mu(next.q);
        return next;
    }

    const GridSpec flat = grid.spatial();
    std::vector<MikadoPair> pairs;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const MikadoSpec spec = block_spec(config, dirs[i], offsets[i], mu, lambda);
        check_resolution(spec, grid);
        pairs.push_back(build_pair(spec, flat));
        if (!(pairs.back().kappa > 0.0)) {
            throw PreconditionError("interaction constant is not positive for direction " + std::to_string(dirs[i]));
        }
    }

    const std::size_t m = grid.points();
    const double cutoff = 0.5 * static_cast<double>(lambda);
    ScalarField theta(grid);
    VectorField w(grid);
    double b_sup = 0.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const int j = dirs[i];
        const MikadoPair& pair = pairs[i];
        ScalarField a(grid), b(grid);
        for (std::size_t k = 0; k < grid.nt; ++k) {
            if (slice_max[k] == 0.0) continue;
            const double delta = config.schedule.delta_floor * slice_max[k];
            const auto r = state.defect[j].slice(k);
            auto as = a.slice(k);
            auto bs = b.slice(k);
            parallel::for_each_index(m, [&](std::size_t x) {
                const AmplitudePair ab = amplitudes(r[x], delta, pair.kappa);
                as[x] = ab.a;
                bs[x] = ab.b;
            });
        }
        a = lowpass(a, cutoff);
        b = lowpass(b, cutoff);
        b_sup = std::max(b_sup, max_abs(b.values()));

        const auto th = pair.theta.slice(0);
        for (std::size_t k = 0; k < grid.nt; ++k) {
            const auto as = a.slice(k);
            const auto bs = b.slice(k);
            auto ts = theta.slice(k);
            parallel::for_each_index(m, [&](std::size_t x) { ts[x] += as[x] * th[x]; });
            for (int c = 0; c < d; ++c) {
                const auto wc = pair.w[c].slice(0);
                auto out = w[c].slice(k);
                parallel::for_each_index(m, [&](std::size_t x) { out[x] += bs[x] * wc[x]; });
            }
        }
    }
    // Mean-free density correction keeps the mass of every slice; the Leray
    // projection removes the divergence that the slow amplitudes introduce.
    for (std::size_t k = 0; k < grid.nt; ++k) {
        const double mean = spatial_mean(theta, k);
        for (double& v : theta.slice(k)) v -= mean;
    }
    w = leray_project(w);

    const Exponents x = exponents_of(config.plan);
    const std::vector<double> consts = profile_constants(config, grid);
    rec.b_sup = b_sup;
    rec.profile_constant = std::accumulate(consts.begin(), consts.end(), 0.0);
    rec.bound = b_sup * static_cast<double>(lambda) * std::pow(mu, -x.c) * rec.profile_constant;
    rec.du_increment = max_over_slices(grid.nt, [&](std::size_t k) { return sobolev_seminorm(w, x.p_tilde, k); });

    IterationState next = make_state(state.rho + theta, state.u + w, config, state.q + 1);
    rec.after = next.norms;
    if (record) *record = rec;
    return next;
}

RunResult run(const ScalarField& rho0, const std::optional<VectorField>& u0, const IterationConfig& config,
              const StateObserver& observer) {
    check_config(config, rho0.spec());
    VectorField u = u0 ? *u0 : VectorField(rho0.spec());
    RunResult result;
    IterationState state = make_state(rho0, std::move(u), config, 0);
    result.initial = state.norms;
    if (observer) observer(state, nullptr);
    for (int q = 0; q < config.schedule.q_max; ++q) {
        StepRecord rec;
        IterationState next = perturbation_step(state, config, &rec);
        result.steps.push_back(rec);
        if (observer) observer(next, &result.steps.back());
        if (config.keep_states) result.states.push_back(std::move(state));
        state = std::move(next);
    }
    result.final_norms = state.norms;
    if (config.keep_states) result.states.push_back(std::move(state));
    return result;
}

}  // namespace mikado
