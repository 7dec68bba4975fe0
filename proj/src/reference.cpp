#include "mikado/reference.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace mikado::reference {

std::vector<double> partial(std::span<const double> slice, int dim, std::size_t n, int axis) {
    std::size_t stride = 1;
    for (int j = dim - 1; j > axis; --j) stride *= n;
    const std::size_t total = slice.size();
    std::vector<double> out(total, 0.0);
    std::vector<std::complex<double>> coeff(n);
    const double two_pi = 2.0 * std::numbers::pi;

    for (std::size_t base = 0; base < total; ++base) {
        // Visit each line once, starting at its axis-index-0 point.
        if ((base / stride) % n != 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const double angle = -two_pi * static_cast<double>(k * i % n) / static_cast<double>(n);
                acc += slice[base + i * stride] * std::complex<double>(std::cos(angle), std::sin(angle));
            }
            const long wave = (2 * k <= n) ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
            const bool nyquist = (n % 2 == 0) && (2 * k == n);
            coeff[k] = nyquist ? 0.0 : acc * std::complex<double>(0.0, two_pi * static_cast<double>(wave));
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                const double angle = two_pi * static_cast<double>(k * i % n) / static_cast<double>(n);
                acc += coeff[k] * std::complex<double>(std::cos(angle), std::sin(angle));
            }
            out[base + i * stride] = acc.real() / static_cast<double>(n);
        }
    }
    return out;
}

double lp_norm(std::span<const double> values, double p, double cell_volume) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (double v : values) s += std::pow(std::abs(v), p);
    return std::pow(cell_volume * s, 1.0 / p);
}

double spatial_mean(std::span<const double> values, double cell_volume) {
    double s = 0.0;
    for (double v : values) s += v;
    return cell_volume * s;
}

std::vector<double> divergence(const VectorField& v, std::size_t slice) {
    const auto& spec = v.spec();
    std::vector<double> out(spec.points(), 0.0);
    for (int j = 0; j < spec.dim; ++j) {
        auto dj = partial(v[j].slice(slice), spec.dim, spec.n, j);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += dj[i];
    }
    return out;
}

}  // namespace mikado::reference
