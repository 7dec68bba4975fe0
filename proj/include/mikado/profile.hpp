#pragma once

#include <string_view>

namespace mikado {

enum class ProfileKind {
    Polynomial,  // scale * (1 - (r/r0)^2)^k
    Cosine,      // scale * cos(pi r / (2 r0))^(2k)
};

std::string_view to_string(ProfileKind kind);
ProfileKind parse_profile_kind(std::string_view text);

/// Radial bump supported in the ball of radius r0 < 1/2.
struct BumpProfile {
    ProfileKind kind = ProfileKind::Polynomial;
    int order = 4;
    double radius = 0.25;
    double scale = 1.0;

    void validate() const;

    double value(double r) const;

    /// Integral of value(|y|)^q over R^D. Closed form via Gamma functions for
    /// the polynomial kind (any D) and the cosine kind with D = 1; the cosine
    /// kind in D >= 2 uses 96-point Gauss-Legendre on the radial integral.
    double power_integral(double q, int D) const;

    /// L^p(R^D) norm of the profile; p may be infinite.
    double lp_norm(double p, int D) const;
};

}  // namespace mikado
