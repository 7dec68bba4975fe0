#include <CLI11.hpp>

#include <ostream>

#include "mikado/error.hpp"
#include "mikado/lab.hpp"

namespace mikado {

namespace {

void add_options(CLI::App& app, LabConfig& c) {
    app.add_option("--p", c.p, "density exponent p (rational or inf)");
    app.add_option("--p-tilde,--p_tilde", c.p_tilde, "Sobolev exponent p~ (rational or inf)");
    app.add_option("--d,--dim", c.d, "spatial dimension");
    app.add_option("--D,--conc-dim", c.D, "concentration dimension (0 follows the variant)");
    app.add_option("--variant", c.variant, "tube or compact");
    app.add_option("--profile-kind,--profile_kind", c.profile_kind, "polynomial or cosine");
    app.add_option("--profile-order,--profile_order", c.profile_order, "smoothness order k");
    app.add_option("--profile-radius,--profile_radius", c.profile_radius, "support radius r0");
    app.add_option("--profile-scale,--profile_scale", c.profile_scale, "profile normalization");
    app.add_option("--n", c.n, "grid points per axis");
    app.add_option("--nt", c.nt, "time slices");
    app.add_option("--t-end,--t_end", c.t_end, "time horizon T");
    app.add_option("--mu", c.mu, "concentration values of a sweep")->delimiter(',');
    app.add_option("--lambda", c.lambda, "oscillation frequency of a sweep");
    app.add_option("--direction", c.direction, "axis of the swept block");
    app.add_option("--tolerance", c.tolerance, "absolute slope tolerance");
    app.add_option("--lambda0", c.lambda0, "initial frequency");
    app.add_option("--growth", c.growth, "frequency growth factor a");
    app.add_option("--gamma", c.gamma, "mu_q = lambda_q^gamma");
    app.add_option("--delta-floor,--delta_floor", c.delta_floor, "amplitude floor fraction");
    app.add_option("--q-max,--q_max", c.q_max, "iteration steps");
    app.add_flag("--diffusion", c.diffusion, "include the Laplacian in the residual");
    app.add_flag("--allow-inadmissible,--allow_inadmissible", c.allow_inadmissible, "run inadmissible plans");
    app.add_option("--rho-amplitude,--rho_amplitude", c.rho_amplitude, "initial density amplitude");
    app.add_option("--rho-mode,--rho_mode", c.rho_mode, "initial density wavenumber");
    app.add_flag("--save-states,!--no-save-states", c.save_states, "write every state container");
    app.add_option("--state", c.state, "state container for probe");
    app.add_option("--particles", c.particles, "probe particle count");
    app.add_option("--rk-steps,--rk_steps", c.rk_steps, "RK4 steps per trajectory");
    app.add_option("--out", c.out, "output directory");
    app.add_option("--seed", c.seed, "seed recorded with the report");
    app.add_flag("--check", c.check, "exit 3 when a tolerance check fails");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mikado convex-integration lab"};
    app.name("mikado-lab");
    app.set_config("--config", "", "key=value configuration file; flags override it");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    LabConfig config;
    add_options(app, config);
    Command command = Command::Regime;
    const auto sub = [&](const char* name, const char* help, Command c) {
        app.add_subcommand(name, help)->fallthrough()->callback([&command, c] { command = c; });
    };
    sub("regime", "classify an exponent pair", Command::Regime);
    sub("sweep", "measure concentration scaling slopes", Command::Sweep);
    sub("iterate", "run the perturbation scheme", Command::Iterate);
    sub("probe", "integrate trajectories of a saved state", Command::Probe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        switch (command) {
            case Command::Regime: return cmd_regime(config, out);
            case Command::Sweep: return cmd_sweep(config, out);
            case Command::Iterate: return cmd_iterate(config, out);
            case Command::Probe: return cmd_probe(config, out);
        }
    } catch (const ResolutionError& e) {
        err << "resolution error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const InvalidArgument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitUsage;
}

}  // namespace mikado
