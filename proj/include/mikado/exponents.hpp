#pragma once

#include <string_view>

#include "mikado/rational.hpp"

namespace mikado {

/// Where an exponent pair (p, p~) sits relative to the known uniqueness and
/// non-uniqueness results. Exactly one label applies to every valid input.
enum class Regime {
    UniqueDiPernaLions,   // p~ >= p'
    NonuniqueTheorem,     // 1/p + 1/p~ > 1 + 1/D
    OpenGap,              // neither (including equality on the critical surface)
    ExcludedEndpoint,     // p = inf or p~ = inf
};

std::string_view to_string(Regime r);

/// Hoelder dual: 1/p + 1/p' = 1, with 1 <-> inf. Throws for p < 1.
Exponent dual_exponent(const Exponent& p);

/// Throws InvalidArgument unless p, p~ >= 1, d >= 2 and D in {d-1, d}.
Regime classify_regime(const Exponent& p, const Exponent& p_tilde, int d, int D);

/// Scaling exponents of the concentrated building blocks:
///   Theta_mu = mu^alpha Theta(mu x),  W_mu = mu^beta W(mu x),
/// with ||Theta_mu||_p and ||W_mu||_{p'} mu-independent and
/// ||D W_mu||_{p~} ~ mu^{-c}.
struct ExponentPlan {
    // Defaults describe exponent_plan(2, 1, 2, 2).
    Exponent p{2};
    Exponent p_dual{2};
    Exponent p_tilde{1};
    int d = 2;
    int D = 2;
    Rational alpha{1};   // D/p
    Rational beta{1};    // D/p'
    Rational c{0};       // D/p~ - beta - 1
    Regime regime = Regime::OpenGap;
    bool admissible = false;  // regime == NonuniqueTheorem, equivalently c > 0
};

/// Never throws for inadmissible exponents; the plan is returned flagged so it
/// can drive negative-control sweeps. Invalid exponents still throw.
ExponentPlan exponent_plan(const Exponent& p, const Exponent& p_tilde, int d, int D);

/// Same plan with the amplitude exponents overridden (c recomputed from beta).
ExponentPlan with_amplitudes(const ExponentPlan& plan, Rational alpha, Rational beta);

/// Side condition of the transport-diffusion variant: p' < d.
bool diffusion_admissible(const Exponent& p, int d);

/// Expected d log(norm) / d log(mu) for a concentration sweep.
struct SlopeTable {
    double theta_lp;      // Theta_mu in L^p
    double w_lp_dual;     // W_mu in L^{p'}
    double dw_lp_tilde;   // D W_mu in L^{p~}
    double theta_l1;      // Theta_mu in L^1 (intermittency diagnostic)
};

SlopeTable predicted_slopes(const ExponentPlan& plan);

}  // namespace mikado
