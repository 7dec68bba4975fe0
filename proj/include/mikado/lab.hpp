#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mikado/exponents.hpp"
#include "mikado/grid.hpp"
#include "mikado/iteration.hpp"
#include "mikado/mikado.hpp"
#include "mikado/probe.hpp"
#include "mikado/report.hpp"

namespace mikado {

/// Exit codes of the lab commands.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitPrecondition = 2,
    kExitCheckFailed = 3,
};

enum class Command { Regime, Sweep, Iterate, Probe };

std::string_view to_string(Command c);

/// Everything a lab command reads. Exponents are kept as text so the echo
/// reproduces exactly what was given.
struct LabConfig {
    // plan
    std::string p = "3/2";
    std::string p_tilde = "11/10";
    int d = 2;
    int D = 0;  // 0: derived from the variant (tube d-1, compact d)
    std::string variant = "compact";
    // profile
    std::string profile_kind = "polynomial";
    int profile_order = 4;
    double profile_radius = 0.25;
    double profile_scale = 1.0;
    // grid
    std::size_t n = 256;
    std::size_t nt = 9;
    double t_end = 0.1;
    // sweep
    std::vector<double> mu = {1, 2, 4, 8};
    long lambda = 1;
    int direction = 0;
    double tolerance = 0.05;
    // iterate
    long lambda0 = 1;
    long growth = 2;
    double gamma = 1.6;
    double delta_floor = 1e-3;
    int q_max = 3;
    bool diffusion = false;
    bool allow_inadmissible = false;
    double rho_amplitude = 0.5;
    int rho_mode = 1;
    bool save_states = true;
    // probe
    std::string state;
    std::size_t particles = 256;
    std::size_t rk_steps = 200;
    // output
    std::string out = "results";
    unsigned long long seed = 0;
    bool check = false;

    /// Field-level validation for one command; throws InvalidArgument.
    void validate(Command c) const;

    /// Canonical "key=value" lines in fixed order for the fields `c` reads.
    std::string echo(Command c) const;

    int concentration_dim() const;
    ExponentPlan plan() const;
    BumpProfile profile() const;
    MikadoVariant mikado_variant() const;
};

/// One fitted scaling exponent of a sweep.
struct SlopeCheck {
    std::string quantity;
    SlopeFit fit;
    double predicted;
    bool pass;
};

struct SweepMeasurement {
    double mu;
    double theta_lp;
    double w_lp_dual;
    double dw_lp_tilde;
    double theta_l1;
    double kappa;
    double divergence;  // relative L^2 norm of div W
};

struct SweepResult {
    ExponentPlan plan;
    std::vector<SweepMeasurement> rows;
    std::vector<SlopeCheck> slopes;  // theta_lp, w_lp_dual, dw_lp_tilde, theta_l1
    bool all_pass() const;
};

/// Builds Theta_mu and W_mu for every mu and fits the four scaling slopes.
/// Throws ResolutionError listing every unresolved mu.
SweepResult run_sweep(const LabConfig& config);

/// Clauses of the desk-run check over the state norms of a run.
struct IterationVerdict {
    bool residual_decreasing = true;  // ||E_{q+1}||_1 < ||E_q||_1 at every step
    double reduction = 1.0;           // ||E_0||_1 / ||E_last||_1
    bool reduction_ok = true;         // reduction >= 2
    bool density_bounded = true;      // max-in-time ||rho_q||_p within a factor 2 of q = 0
    bool increment_bounded = true;    // ||Du_{q+1} - Du_q||_{p~} <= 2 bound
    bool pass() const { return residual_decreasing && reduction_ok && density_bounded && increment_bounded; }
};

IterationVerdict assess_iteration(const std::vector<StateNorms>& norms, const std::vector<StepRecord>& steps);

/// rho0(t, x) = 1 + A (t/T) cos(2 pi m x_1).
ScalarField initial_density(const GridSpec& grid, double amplitude, int mode);

IterationConfig iteration_config(const LabConfig& config);

/// Commands write CSV reports under config.out and a summary to `out`; the
/// return value is an ExitCode. Errors propagate as exceptions.
int cmd_regime(const LabConfig& config, std::ostream& out);
int cmd_sweep(const LabConfig& config, std::ostream& out);
int cmd_iterate(const LabConfig& config, std::ostream& out);
int cmd_probe(const LabConfig& config, std::ostream& out);

/// Full command line entry point: parsing, dispatch and mapping of
/// exceptions to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mikado
