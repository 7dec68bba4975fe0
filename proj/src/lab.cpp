#include "mikado/lab.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mikado/error.hpp"
#include "mikado/field_io.hpp"
#include "mikado/norms.hpp"
#include "mikado/spectral.hpp"

namespace mikado {

namespace {

[[noreturn]] void bad_field(std::string_view field, const std::string& why) {
    throw InvalidArgument("config field '" + std::string(field) + "': " + why);
}

Exponent parse_exponent_field(std::string_view field, const std::string& text) {
    try {
        const Exponent e = Exponent::parse(text);
        if (!e.is_infinite() && e.value() < Rational(1)) bad_field(field, "must be >= 1 or inf, got " + text);
        return e;
    } catch (const InvalidArgument& ex) {
        if (std::string_view(ex.what()).starts_with("config field")) throw;
        bad_field(field, ex.what());
    }
}

std::string join_numbers(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Echo {
    std::ostringstream out;
    template <class T>
    Echo& operator()(std::string_view key, const T& value) {
        out << key << '=' << value << '\n';
        return *this;
    }
    Echo& num(std::string_view key, double value) { return (*this)(key, format_number(value)); }
};

void ensure_out_dir(const LabConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out, ec);
    if (ec) throw InvalidArgument("config field 'out': cannot create directory " + config.out + ": " + ec.message());
}

}  // namespace

std::string_view to_string(Command c) {
    switch (c) {
        case Command::Regime: return "regime";
        case Command::Sweep: return "sweep";
        case Command::Iterate: return "iterate";
        case Command::Probe: return "probe";
    }
    return "unknown";
}

int LabConfig::concentration_dim() const {
    if (D != 0) return D;
    return concentration_dimension(mikado_variant(), d);
}

MikadoVariant LabConfig::mikado_variant() const {
    try {
        return parse_variant(variant);
    } catch (const InvalidArgument& ex) {
        bad_field("variant", ex.what());
    }
}

BumpProfile LabConfig::profile() const {
    BumpProfile prof;
    try {
        prof.kind = parse_profile_kind(profile_kind);
    } catch (const InvalidArgument& ex) {
        bad_field("profile_kind", ex.what());
    }
    prof.order = profile_order;
    prof.radius = profile_radius;
    prof.scale = profile_scale;
    return prof;
}

ExponentPlan LabConfig::plan() const {
    return exponent_plan(parse_exponent_field("p", p), parse_exponent_field("p_tilde", p_tilde), d, concentration_dim());
}

void LabConfig::validate(Command c) const {
    if (c == Command::Probe) {
        if (state.empty()) bad_field("state", "a state file is required");
        if (particles == 0) bad_field("particles", "must be positive");
        if (rk_steps == 0) bad_field("rk_steps", "must be positive");
        return;
    }
    parse_exponent_field("p", p);
    parse_exponent_field("p_tilde", p_tilde);
    if (d < 2 || d > kMaxDim) bad_field("d", "must lie in [2, " + std::to_string(kMaxDim) + "]");
    if (D != 0 && D != d - 1 && D != d) bad_field("D", "must be d-1 or d (or 0 to follow the variant)");
    if (c == Command::Regime) return;

    const MikadoVariant var = mikado_variant();
    if (D != 0 && D != concentration_dimension(var, d)) {
        bad_field("D", "the " + variant + " variant concentrates in D = " + std::to_string(concentration_dimension(var, d)));
    }
    if (var == MikadoVariant::Compact && d != 2 && d != 3) bad_field("d", "the compact variant supports d = 2 or 3");
    try {
        profile().validate();
    } catch (const InvalidArgument& ex) {
        bad_field("profile", ex.what());
    }
    if (n < 8) bad_field("n", "must be >= 8");
    if (c == Command::Sweep) {
        if (mu.size() < 3) bad_field("mu", "a sweep needs at least 3 values");
        for (double m : mu) {
            if (!(m >= 1.0) || !std::isfinite(m)) bad_field("mu", "values must be finite and >= 1");
        }
        if (lambda < 1) bad_field("lambda", "must be a positive integer");
        if (direction < 0 || direction >= d) bad_field("direction", "must lie in [0, d)");
        if (!(tolerance > 0.0)) bad_field("tolerance", "must be positive");
        return;
    }
    if (nt < 3) bad_field("nt", "iteration needs at least 3 time slices");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) bad_field("t_end", "must be positive");
    if (lambda0 < 1) bad_field("lambda0", "must be a positive integer");
    if (growth < 2) bad_field("growth", "must be an integer >= 2");
    if (!(gamma > 0.0)) bad_field("gamma", "must be positive");
    if (!(delta_floor > 0.0 && delta_floor < 1.0)) bad_field("delta_floor", "must lie in (0, 1)");
    if (q_max < 0) bad_field("q_max", "must be >= 0");
    if (rho_mode < 1) bad_field("rho_mode", "must be >= 1");
    if (!std::isfinite(rho_amplitude)) bad_field("rho_amplitude", "must be finite");
}

std::string LabConfig::echo(Command c) const {
    Echo e;
    e("command", to_string(c));
    if (c == Command::Probe) {
        e("state", state)("particles", particles)("rk_steps", rk_steps)("seed", seed);
        return e.out.str();
    }
    e("p", p)("p_tilde", p_tilde)("d", d)("D", concentration_dim());
    if (c == Command::Regime) return e.out.str();
    e("variant", variant)("profile_kind", profile_kind)("profile_order", profile_order);
    e.num("profile_radius", profile_radius).num("profile_scale", profile_scale);
    e("n", n);
    if (c == Command::Sweep) {
        e("mu", join_numbers(mu))("lambda", lambda)("direction", direction).num("tolerance", tolerance);
    } else {
        e("nt", nt).num("t_end", t_end);
        e("lambda0", lambda0)("growth", growth).num("gamma", gamma).num("delta_floor", delta_floor)("q_max", q_max);
        e("diffusion", yes_no(diffusion))("allow_inadmissible", yes_no(allow_inadmissible));
        e.num("rho_amplitude", rho_amplitude)("rho_mode", rho_mode);
    }
    e("seed", seed);
    return e.out.str();
}

bool SweepResult::all_pass() const {
    return std::all_of(slopes.begin(), slopes.end(), [](const SlopeCheck& s) { return s.pass; });
}

SweepResult run_sweep(const LabConfig& config) {
    config.validate(Command::Sweep);
    const ExponentPlan plan = config.plan();
    const GridSpec grid{config.d, config.n, 1, 0.0};

    MikadoSpec spec;
    spec.variant = config.mikado_variant();
    spec.direction = config.direction;
    spec.profile = config.profile();
    spec.alpha = plan.alpha.to_double();
    spec.beta = plan.beta.to_double();
    spec.lambda = config.lambda;

    std::string unresolved;
    std::size_t need = 0;
    for (double m : config.mu) {
        spec.mu = m;
        const std::size_t r = required_resolution(spec);
        if (r > config.n) {
            unresolved += " mu=" + format_number(m) + " needs N>=" + std::to_string(r) + ";";
            need = std::max(need, r);
        }
    }
    if (!unresolved.empty()) {
        throw ResolutionError("sweep grid N = " + std::to_string(config.n) + " is too coarse:" + unresolved, need);
    }

    const double p = plan.p.to_double();
    const double pd = plan.p_dual.to_double();
    const double pt = plan.p_tilde.to_double();
    SweepResult res{plan, {}, {}};
    for (double m : config.mu) {
        spec.mu = m;
        const MikadoPair pair = build_pair(spec, grid);
        const double w_h1 = sobolev_seminorm(pair.w, 2.0, 0);
        const double div_rel = w_h1 > 0.0 ? lp_norm(divergence(pair.w), 2.0, 0) / w_h1 : 0.0;
        res.rows.push_back({m, lp_norm(pair.theta, p, 0), lp_norm(pair.w, pd, 0), sobolev_seminorm(pair.w, pt, 0),
                            lp_norm(pair.theta, 1.0, 0), pair.kappa, div_rel});
    }

    const SlopeTable predicted = predicted_slopes(plan);
    const auto column = [&](double SweepMeasurement::*field) {
        std::vector<double> v;
        for (const auto& r : res.rows) v.push_back(r.*field);
        return v;
    };
    const std::vector<double> mus = column(&SweepMeasurement::mu);
    const auto add = [&](std::string name, double SweepMeasurement::*field, double pred) {
        const SlopeFit fit = fit_slope(mus, column(field));
        res.slopes.push_back({std::move(name), fit, pred, std::abs(fit.slope - pred) <= config.tolerance});
    };
    add("theta_lp", &SweepMeasurement::theta_lp, predicted.theta_lp);
    add("w_lp_dual", &SweepMeasurement::w_lp_dual, predicted.w_lp_dual);
    add("dw_lp_tilde", &SweepMeasurement::dw_lp_tilde, predicted.dw_lp_tilde);
    add("theta_l1", &SweepMeasurement::theta_l1, predicted.theta_l1);
    return res;
}

ScalarField initial_density(const GridSpec& grid, double amplitude, int mode) {
    const double t_end = grid.t_end > 0.0 ? grid.t_end : 1.0;
    const double k = 2.0 * std::numbers::pi * mode;
    return ScalarField::sample(grid, [&](double t, const Point& x) {
        return 1.0 + amplitude * (t / t_end) * std::cos(k * x[0]);
    });
}

IterationConfig iteration_config(const LabConfig& config) {
    IterationConfig ic;
    ic.plan = config.plan();
    ic.variant = config.mikado_variant();
    ic.profile = config.profile();
    ic.schedule = Schedule{config.lambda0, config.growth, config.gamma, config.delta_floor, config.q_max};
    ic.diffusion = config.diffusion;
    ic.allow_inadmissible = config.allow_inadmissible;
    ic.keep_states = false;
    return ic;
}

int cmd_regime(const LabConfig& config, std::ostream& out) {
    config.validate(Command::Regime);
    const ExponentPlan plan = config.plan();
    const bool diff = diffusion_admissible(plan.p, plan.d);
    out << "regime=" << to_string(plan.regime) << " p=" << plan.p.to_string() << " p_dual=" << plan.p_dual.to_string()
        << " p_tilde=" << plan.p_tilde.to_string() << " d=" << plan.d << " D=" << plan.D
        << " alpha=" << plan.alpha.to_string() << " beta=" << plan.beta.to_string() << " c=" << plan.c.to_string()
        << " (" << format_number(plan.c.to_double()) << ")"
        << " admissible=" << yes_no(plan.admissible) << " diffusion_admissible=" << yes_no(diff) << '\n';
    out << "{\"regime\":\"" << to_string(plan.regime) << "\",\"p\":\"" << plan.p.to_string() << "\",\"p_dual\":\""
        << plan.p_dual.to_string() << "\",\"p_tilde\":\"" << plan.p_tilde.to_string() << "\",\"d\":" << plan.d
        << ",\"D\":" << plan.D << ",\"alpha\":\"" << plan.alpha.to_string() << "\",\"beta\":\""
        << plan.beta.to_string() << "\",\"c\":\"" << plan.c.to_string() << "\",\"c_value\":"
        << format_number(plan.c.to_double()) << ",\"admissible\":" << (plan.admissible ? "true" : "false")
        << ",\"diffusion_admissible\":" << (diff ? "true" : "false") << "}\n";
    return kExitOk;
}

int cmd_sweep(const LabConfig& config, std::ostream& out) {
    const SweepResult res = run_sweep(config);
    CsvReport csv("sweep", config.echo(Command::Sweep));
    csv.set_columns({"record", "quantity", "mu", "value", "predicted", "stderr", "pass"});
    for (const auto& r : res.rows) {
        const std::string mu = format_number(r.mu);
        for (const auto& [name, v] : {std::pair{"theta_lp", r.theta_lp}, {"w_lp_dual", r.w_lp_dual},
                                      {"dw_lp_tilde", r.dw_lp_tilde}, {"theta_l1", r.theta_l1},
                                      {"kappa", r.kappa}, {"div_w_rel", r.divergence}}) {
            csv.add_row({"measure", name, mu, format_number(v), "", "", ""});
        }
    }
    for (const auto& s : res.slopes) {
        csv.add_row({"slope", s.quantity, "", format_number(s.fit.slope), format_number(s.predicted),
                     format_number(s.fit.std_error), s.pass ? "pass" : "fail"});
    }
    ensure_out_dir(config);
    csv.save(std::filesystem::path(config.out) / "sweep.csv");

    out << "sweep plan p=" << res.plan.p.to_string() << " p_tilde=" << res.plan.p_tilde.to_string()
        << " D=" << res.plan.D << " c=" << res.plan.c.to_string() << " admissible=" << yes_no(res.plan.admissible)
        << " regime=" << to_string(res.plan.regime) << '\n';
    for (const auto& s : res.slopes) {
        out << "  " << s.quantity << " slope=" << format_number(s.fit.slope) << " predicted="
            << format_number(s.predicted) << " stderr=" << format_number(s.fit.std_error) << ' '
            << (s.pass ? "PASS" : "FAIL") << '\n';
    }
    if (!res.plan.admissible) {
        const double dw = res.slopes[2].fit.slope;
        out << "  derivative cost " << (dw > 0.0 ? "grows" : "does not decay") << " with mu (slope "
            << format_number(dw) << "); plan flagged inadmissible\n";
    }
    out << "  report " << (std::filesystem::path(config.out) / "sweep.csv").string() << " config_id=" << csv.id() << '\n';
    return config.check && !res.all_pass() ? kExitCheckFailed : kExitOk;
}

int cmd_iterate(const LabConfig& config, std::ostream& out) {
    config.validate(Command::Iterate);
    const IterationConfig ic = iteration_config(config);
    const GridSpec grid{config.d, config.n, config.nt, config.t_end};
    check_config(ic, grid);

    CsvReport csv("iterate", config.echo(Command::Iterate));
    csv.set_columns({"q", "lambda", "mu", "residual_l1", "residual_l2", "defect_l1", "rho_lp", "u_lp_dual",
                     "du_lp_tilde", "du_increment", "bound", "b_sup", "suppressed", "max_drift"});
    ensure_out_dir(config);
    const std::filesystem::path dir(config.out);
    std::vector<StateNorms> norms;
    std::vector<StepRecord> steps;
    const auto observer = [&](const IterationState& s, const StepRecord* rec) {
        double drift = 0.0;
        for (double v : s.drift) drift = std::max(drift, std::abs(v));
        const auto& n = s.norms;
        csv.add_row({std::to_string(s.q), rec ? std::to_string(rec->lambda) : "", rec ? format_number(rec->mu) : "",
                     format_number(n.residual_l1), format_number(n.residual_l2), format_number(n.defect_l1),
                     format_number(n.rho_lp), format_number(n.u_lp_dual), format_number(n.du_lp_tilde),
                     rec ? format_number(rec->du_increment) : "", rec ? format_number(rec->bound) : "",
                     rec ? format_number(rec->b_sup) : "", rec ? (rec->suppressed ? "yes" : "no") : "",
                     format_number(drift)});
        norms.push_back(n);
        if (rec) steps.push_back(*rec);
        if (config.save_states) {
            save_container(dir / ("state_q" + std::to_string(s.q) + ".mkf"), bundle_state(s.rho, s.u));
        }
        out << "q=" << s.q << " residual_l1=" << format_number(n.residual_l1)
            << " defect_l1=" << format_number(n.defect_l1) << " rho_lp=" << format_number(n.rho_lp);
        if (rec) {
            out << " du_increment=" << format_number(rec->du_increment) << " bound=" << format_number(rec->bound);
        }
        out << '\n';
    };

    try {
        run(initial_density(grid, config.rho_amplitude, config.rho_mode), std::nullopt, ic, observer);
    } catch (...) {
        csv.add_comment("aborted");
        csv.save(dir / "iterate.csv");
        throw;
    }
    csv.save(dir / "iterate.csv");

    const IterationVerdict v = assess_iteration(norms, steps);
    out << "  residual strictly decreasing: " << (v.residual_decreasing ? "PASS" : "FAIL") << '\n'
        << "  residual reduction factor " << format_number(v.reduction) << " >= 2: " << (v.reduction_ok ? "PASS" : "FAIL")
        << '\n'
        << "  density bound within factor 2: " << (v.density_bounded ? "PASS" : "FAIL") << '\n'
        << "  increment below 2x bound: " << (v.increment_bounded ? "PASS" : "FAIL") << '\n'
        << "  report " << (dir / "iterate.csv").string() << " config_id=" << csv.id() << '\n';
    return config.check && !v.pass() ? kExitCheckFailed : kExitOk;
}

IterationVerdict assess_iteration(const std::vector<StateNorms>& norms, const std::vector<StepRecord>& steps) {
    IterationVerdict v;
    if (norms.empty()) return v;
    const double e0 = norms.front().residual_l1;
    const double rho0 = norms.front().rho_lp;
    for (std::size_t q = 1; q < norms.size(); ++q) {
        if (!(norms[q].residual_l1 < norms[q - 1].residual_l1)) v.residual_decreasing = false;
        if (!(norms[q].rho_lp <= 2.0 * rho0 && norms[q].rho_lp >= 0.5 * rho0)) v.density_bounded = false;
    }
    const double ef = norms.back().residual_l1;
    v.reduction = ef > 0.0 ? e0 / ef : (e0 > 0.0 ? kInfinity : 1.0);
    v.reduction_ok = norms.size() < 2 || v.reduction >= 2.0;
    for (const auto& s : steps) {
        if (!s.suppressed && !(s.du_increment <= 2.0 * s.bound)) v.increment_bounded = false;
    }
    return v;
}

int cmd_probe(const LabConfig& config, std::ostream& out) {
    config.validate(Command::Probe);
    const StateFields st = state_from(load_container(config.state));
    const ProbeReport rep = lagrangian_probe(st.u, st.rho, config.particles, config.rk_steps);

    CsvReport csv("probe", config.echo(Command::Probe));
    csv.set_columns({"particle", "defect", "bound"});
    for (std::size_t i = 0; i < rep.particles; ++i) {
        csv.add_row({std::to_string(i), format_number(rep.defects[i]), format_number(rep.bounds[i])});
    }
    ensure_out_dir(config);
    csv.save(std::filesystem::path(config.out) / "probe.csv");

    const bool consistent = rep.mean_defect <= 2.0 * rep.mean_bound + 1e-12;
    out << "probe particles=" << rep.particles << " max_defect=" << format_number(rep.max_defect)
        << " mean_defect=" << format_number(rep.mean_defect) << " mean_bound=" << format_number(rep.mean_bound)
        << " consistent=" << (consistent ? "yes" : "no") << '\n';
    return config.check && !consistent ? kExitCheckFailed : kExitOk;
}

}  // namespace mikado
