#include "mikado/exponents.hpp"

#include <string>

#include "mikado/error.hpp"

namespace mikado {

namespace {

void require_exponent(const Exponent& p, const char* name) {
    if (!p.is_infinite() && p.value() < Rational(1)) {
        throw InvalidArgument(std::string(name) + " must be >= 1 or inf, got " + p.to_string());
    }
}

void require_dimensions(int d, int D) {
    if (d < 2) throw InvalidArgument("d must be >= 2, got " + std::to_string(d));
    if (D != d - 1 && D != d) {
        throw InvalidArgument("concentration dimension D must be d-1 or d, got D=" + std::to_string(D) +
                              " for d=" + std::to_string(d));
    }
}

}  // namespace

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::UniqueDiPernaLions: return "UNIQUE_DIPERNA_LIONS";
        case Regime::NonuniqueTheorem: return "NONUNIQUE_THEOREM";
        case Regime::OpenGap: return "OPEN_GAP";
        case Regime::ExcludedEndpoint: return "EXCLUDED_ENDPOINT";
    }
    return "UNKNOWN";
}

Exponent dual_exponent(const Exponent& p) {
    require_exponent(p, "p");
    if (p.is_infinite()) return Exponent(1);
    if (p.value() == Rational(1)) return Exponent::infinity();
    return Exponent(p.value() / (p.value() - Rational(1)));
}

Regime classify_regime(const Exponent& p, const Exponent& p_tilde, int d, int D) {
    require_exponent(p, "p");
    require_exponent(p_tilde, "p_tilde");
    require_dimensions(d, D);
    if (p.is_infinite() || p_tilde.is_infinite()) return Regime::ExcludedEndpoint;
    if (p_tilde >= dual_exponent(p)) return Regime::UniqueDiPernaLions;
    // Strict inequality; equality stays in the open gap.
    if (p.reciprocal() + p_tilde.reciprocal() > Rational(1) + Rational(1, D)) return Regime::NonuniqueTheorem;
    return Regime::OpenGap;
}

ExponentPlan exponent_plan(const Exponent& p, const Exponent& p_tilde, int d, int D) {
    const Regime regime = classify_regime(p, p_tilde, d, D);
    const Exponent p_dual = dual_exponent(p);
    const Rational dim(D);
    ExponentPlan plan{p, p_dual, p_tilde, d, D, dim * p.reciprocal(), dim * p_dual.reciprocal(), Rational(0),
                      regime, regime == Regime::NonuniqueTheorem};
    plan.c = dim * p_tilde.reciprocal() - plan.beta - Rational(1);
    return plan;
}

ExponentPlan with_amplitudes(const ExponentPlan& plan, Rational alpha, Rational beta) {
    ExponentPlan out = plan;
    out.alpha = alpha;
    out.beta = beta;
    out.c = Rational(plan.D) * plan.p_tilde.reciprocal() - beta - Rational(1);
    return out;
}

bool diffusion_admissible(const Exponent& p, int d) {
    return dual_exponent(p) < Exponent(d);
}

SlopeTable predicted_slopes(const ExponentPlan& plan) {
    const Rational dim(plan.D);
    return SlopeTable{
        (plan.alpha - dim * plan.p.reciprocal()).to_double(),
        (plan.beta - dim * plan.p_dual.reciprocal()).to_double(),
        (plan.beta + Rational(1) - dim * plan.p_tilde.reciprocal()).to_double(),
        (plan.alpha - dim).to_double(),
    };
}

}  // namespace mikado
