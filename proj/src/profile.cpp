#include "mikado/profile.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mikado/error.hpp"

namespace mikado {

namespace {

constexpr double kPi = std::numbers::pi;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> nodes, weights;

    explicit GaussLegendre(int n) : nodes(static_cast<std::size_t>(n)), weights(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[static_cast<std::size_t>(i)] = x;
            weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

double unit_sphere_area(int D) {
    // |S^{D-1}| = 2 pi^{D/2} / Gamma(D/2)
    return 2.0 * std::pow(kPi, 0.5 * D) / std::tgamma(0.5 * D);
}

}  // namespace

std::string_view to_string(ProfileKind kind) {
    return kind == ProfileKind::Polynomial ? "polynomial" : "cosine";
}

ProfileKind parse_profile_kind(std::string_view text) {
    if (text == "polynomial") return ProfileKind::Polynomial;
    if (text == "cosine") return ProfileKind::Cosine;
    throw InvalidArgument("profile kind must be 'polynomial' or 'cosine', got '" + std::string(text) + "'");
}

void BumpProfile::validate() const {
    if (order < 2) throw InvalidArgument("profile: smoothness order must be >= 2");
    if (!(radius > 0.0 && radius < 0.5)) throw InvalidArgument("profile: support radius must lie in (0, 1/2)");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("profile: scale must be positive");
}

double BumpProfile::value(double r) const {
    const double s = r / radius;
    if (s >= 1.0) return 0.0;
    if (kind == ProfileKind::Polynomial) return scale * std::pow(1.0 - s * s, order);
    return scale * std::pow(std::cos(0.5 * kPi * s), 2 * order);
}

double BumpProfile::power_integral(double q, int D) const {
    if (D < 1) throw InvalidArgument("profile: integration dimension must be >= 1");
    if (!(q > 0.0)) throw InvalidArgument("profile: power must be positive");
    const double kq = order * q;
    const double sq = std::pow(scale, q);
    if (kind == ProfileKind::Polynomial) {
        // int_{|y|<r0} (1 - |y|^2/r0^2)^{kq} dy = r0^D pi^{D/2} Gamma(kq+1) / Gamma(kq+1+D/2)
        return sq * std::pow(radius, D) * std::pow(kPi, 0.5 * D) *
               std::exp(std::lgamma(kq + 1.0) - std::lgamma(kq + 1.0 + 0.5 * D));
    }
    if (D == 1) {
        // int_{-r0}^{r0} cos^{2kq}(pi r/(2 r0)) dr = (2 r0/pi) sqrt(pi) Gamma(kq+1/2) / Gamma(kq+1)
        return sq * (2.0 * radius / kPi) * std::sqrt(kPi) * std::exp(std::lgamma(kq + 0.5) - std::lgamma(kq + 1.0));
    }
    static const GaussLegendre rule(96);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = 0.5 * radius * (rule.nodes[i] + 1.0);
        acc += rule.weights[i] * std::pow(value(r), q) * std::pow(r, D - 1);
    }
    return unit_sphere_area(D) * 0.5 * radius * acc;
}

double BumpProfile::lp_norm(double p, int D) const {
    if (std::isinf(p)) return scale;
    return std::pow(power_integral(p, D), 1.0 / p);
}

}  // namespace mikado
