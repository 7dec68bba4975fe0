#pragma once

// Oracles shared by the unit tests. Nothing here calls the spectral code:
// fields are built from explicit Fourier sums and derivatives are either
// analytic or fourth-order finite differences.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mikado/grid.hpp"

namespace testing {

using mikado::GridSpec;
using mikado::Point;
using mikado::ScalarField;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Random trigonometric polynomial with integer wavevectors |k_j| <= kmax.
struct Trig {
    struct Mode {
        std::vector<int> k;
        double a, b;  // a cos(2 pi k.x) + b sin(2 pi k.x)
    };
    int dim;
    double mean = 0.0;
    std::vector<Mode> modes;

    Trig(int d, int kmax, int count, std::mt19937_64& rng, bool zero_mean) : dim(d) {
        std::uniform_int_distribution<int> kd(-kmax, kmax);
        std::normal_distribution<double> nd;
        if (!zero_mean) mean = nd(rng);
        for (int m = 0; m < count; ++m) {
            Mode mode{std::vector<int>(static_cast<std::size_t>(d)), nd(rng), nd(rng)};
            bool nonzero = false;
            for (auto& k : mode.k) {
                k = kd(rng);
                nonzero = nonzero || k != 0;
            }
            if (!nonzero) mode.k[0] = 1;
            modes.push_back(mode);
        }
    }

    double phase(const Mode& m, const Point& x) const {
        double s = 0.0;
        for (int j = 0; j < dim; ++j) s += m.k[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        return kTwoPi * s;
    }

    double value(const Point& x) const {
        double v = mean;
        for (const auto& m : modes) v += m.a * std::cos(phase(m, x)) + m.b * std::sin(phase(m, x));
        return v;
    }

    /// Analytic d/dx_axis.
    double derivative(const Point& x, int axis) const {
        double v = 0.0;
        for (const auto& m : modes) {
            const double w = kTwoPi * m.k[static_cast<std::size_t>(axis)];
            v += w * (-m.a * std::sin(phase(m, x)) + m.b * std::cos(phase(m, x)));
        }
        return v;
    }

    /// Analytic Laplacian.
    double laplacian(const Point& x) const {
        double v = 0.0;
        for (const auto& m : modes) {
            double k2 = 0.0;
            for (int k : m.k) k2 += static_cast<double>(k) * k;
            v -= kTwoPi * kTwoPi * k2 * (m.a * std::cos(phase(m, x)) + m.b * std::sin(phase(m, x)));
        }
        return v;
    }

    ScalarField sample(const GridSpec& g) const {
        return ScalarField::sample(g, [&](double, const Point& x) { return value(x); });
    }
};

/// Fourth-order centred difference along `axis` of slice `k`.
inline std::vector<double> fd4(const ScalarField& f, std::size_t k, int axis) {
    const GridSpec& g = f.spec();
    const auto s = f.slice(k);
    std::size_t stride = 1;
    for (int a = g.dim - 1; a > axis; --a) stride *= g.n;
    std::vector<double> out(s.size());
    const double h = g.h();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::size_t c = (i / stride) % g.n;
        const auto at = [&](long off) {
            const auto cc = static_cast<std::size_t>((static_cast<long>(c) + off + 2 * static_cast<long>(g.n)) %
                                                     static_cast<long>(g.n));
            return s[i + cc * stride - c * stride];
        };
        out[i] = (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
    }
    return out;
}

/// sqrt(mean (a - b)^2) / sqrt(mean b^2) by a plain loop.
template <class A, class B>
double rel_l2(const A& a, const B& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

template <class A>
double max_abs(const A& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace testing
