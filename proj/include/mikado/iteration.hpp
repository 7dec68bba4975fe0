#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mikado/exponents.hpp"
#include "mikado/grid.hpp"
#include "mikado/mikado.hpp"

namespace mikado {

/// lambda_q = lambda_0 * growth^q, mu_q = lambda_q^gamma.
struct Schedule {
    long lambda0 = 1;
    long growth = 2;
    double gamma = 1.6;
    double delta_floor = 1e-3;
    int q_max = 3;

    void validate() const;
    long lambda(int q) const;
    double mu(int q) const;
};

struct IterationConfig {
    ExponentPlan plan;
    MikadoVariant variant = MikadoVariant::Compact;
    BumpProfile profile;
    Schedule schedule;
    std::vector<int> directions;   // empty means every axis
    bool diffusion = false;
    bool allow_inadmissible = false;
    bool keep_states = true;
    double suppress_below = 1e-12;  // defects with max |R| below this are not corrected
};

/// Norms of one state. Time-dependent quantities are maxima over slices.
struct StateNorms {
    double rho_lp = 0.0;        // ||rho||_{L^p}
    double u_lp_dual = 0.0;     // ||u||_{L^{p'}}
    double du_lp_tilde = 0.0;   // ||Du||_{L^{p~}}
    double residual_l1 = 0.0;   // ||E||_{L^1}
    double residual_l2 = 0.0;
    double defect_l1 = 0.0;     // || |R| ||_{L^1}
};

struct IterationState {
    int q = 0;
    ScalarField rho;
    VectorField u;
    ScalarField residual;
    VectorField defect;
    std::vector<double> drift;  // spatial mean of the residual per slice
    long lambda = 1;            // frequencies the next step uses
    double mu = 1.0;
    StateNorms norms;
};

/// What one perturbation step did.
struct StepRecord {
    int q = 0;                   // step q maps state q to state q+1
    long lambda = 1;
    double mu = 1.0;
    bool suppressed = false;
    double b_sup = 0.0;          // ||b_q||_inf
    double du_increment = 0.0;   // max_t ||Du_{q+1} - Du_q||_{L^{p~}}
    double bound = 0.0;          // ||b_q||_inf lambda_q mu_q^{-c} * profile constant
    double profile_constant = 0.0;
    StateNorms before;
    StateNorms after;
};

struct RunResult {
    std::vector<IterationState> states;  // empty unless keep_states
    std::vector<StepRecord> steps;
    StateNorms initial;
    StateNorms final_norms;
};

/// E = d_t rho + u . grad rho (- Laplacian rho with diffusion). Needs Nt >= 3.
ScalarField residual(const ScalarField& rho, const VectorField& u, bool diffusion);

struct Defect {
    VectorField field;
    std::vector<double> drift;
};

/// Removes the spatial mean of E per slice (returned as drift) and applies the
/// anti-divergence to what is left.
Defect defect_from_residual(const ScalarField& residual);

/// Pointwise amplitude rule b = sqrt((|R| + delta)/kappa), a = -R/(kappa b).
struct AmplitudePair {
    double a;
    double b;
};
AmplitudePair amplitudes(double r, double delta, double kappa);

/// Residual, defect and norms for (rho, u).
IterationState make_state(ScalarField rho, VectorField u, const IterationConfig& config, int q = 0);

/// One step of the scheme: adds a Theta(lambda x) and b W(lambda x) for every
/// direction and recomputes residual and defect from scratch.
IterationState perturbation_step(const IterationState& state, const IterationConfig& config,
                                 StepRecord* record = nullptr);

using StateObserver = std::function<void(const IterationState&, const StepRecord*)>;

/// q_max steps from (rho0, u0); u0 defaults to zero. The observer sees every
/// state (with the record of the step that produced it, null for the first).
RunResult run(const ScalarField& rho0, const std::optional<VectorField>& u0, const IterationConfig& config,
              const StateObserver& observer = {});

/// Checks admissibility and, with diffusion, p' < d. Throws PreconditionError.
void check_config(const IterationConfig& config, const GridSpec& grid);

/// L^{p~} norms of D W at lambda = mu = 1 for each direction: the profile
/// constants of the derivative bound.
std::vector<double> profile_constants(const IterationConfig& config, const GridSpec& grid);

}  // namespace mikado
