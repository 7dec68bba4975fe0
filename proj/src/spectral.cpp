#include "mikado/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mikado/error.hpp"
#include "mikado/fourier.hpp"
#include "mikado/norms.hpp"
#include "mikado/parallel.hpp"

namespace mikado {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const FourierGrid& fourier_for(const GridSpec& spec) {
    return FourierGrid::instance(spec.dim, spec.n);
}

/// Runs `body(k)` for every time slice; slices are independent.
template <class F>
void for_each_slice(std::size_t nt, F&& body) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(nt); ++k) body(static_cast<std::size_t>(k));
}

/// out = inverse(symbol(idx) * hat)
template <class Symbol>
void apply_symbol(const FourierGrid& fg, std::span<const Complex> hat, std::span<Complex> work,
                  std::span<double> out, Symbol&& symbol) {
    for (std::size_t i = 0; i < hat.size(); ++i) work[i] = symbol(i) * hat[i];
    fg.inverse(work, out);
}

}  // namespace

ScalarField partial(const ScalarField& f, int axis) {
    f.require_finite("partial");
    const auto& spec = f.spec();
    if (axis < 0 || axis >= spec.dim) throw InvalidArgument("partial: axis out of range");
    const auto& fg = fourier_for(spec);
    ScalarField out(spec);
    for_each_slice(spec.nt, [&](std::size_t k) {
        std::vector<Complex> hat(fg.spectral_size()), work(fg.spectral_size());
        fg.forward(f.slice(k), hat);
        apply_symbol(fg, hat, work, out.slice(k), [&](std::size_t i) {
            return Complex(0.0, kTwoPi * fg.derivative_wavenumber(axis, i));
        });
    });
    return out;
}

VectorField gradient(const ScalarField& f) {
    f.require_finite("gradient");
    const auto& spec = f.spec();
    const auto& fg = fourier_for(spec);
    VectorField out(spec);
    for_each_slice(spec.nt, [&](std::size_t k) {
        std::vector<Complex> hat(fg.spectral_size()), work(fg.spectral_size());
        fg.forward(f.slice(k), hat);
        for (int j = 0; j < spec.dim; ++j) {
            apply_symbol(fg, hat, work, out[j].slice(k), [&](std::size_t i) {
                return Complex(0.0, kTwoPi * fg.derivative_wavenumber(j, i));
            });
        }
    });
    return out;
}

ScalarField divergence(const VectorField& v) {
    v.require_finite("divergence");
    const auto& spec = v.spec();
    const auto& fg = fourier_for(spec);
    ScalarField out(spec);
    for_each_slice(spec.nt, [&](std::size_t k) {
        std::vector<Complex> hat(fg.spectral_size()), acc(fg.spectral_size(), Complex(0.0, 0.0));
        for (int j = 0; j < spec.dim; ++j) {
            fg.forward(v[j].slice(k), hat);
            for (std::size_t i = 0; i < hat.size(); ++i) {
                acc[i] += Complex(0.0, kTwoPi * fg.derivative_wavenumber(j, i)) * hat[i];
            }
        }
        fg.inverse(acc, out.slice(k));
    });
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    f.require_finite("laplacian");
    const auto& spec = f.spec();
    const auto& fg = fourier_for(spec);
    ScalarField out(spec);
    for_each_slice(spec.nt, [&](std::size_t k) {
        std::vector<Complex> hat(fg.spectral_size()), work(fg.spectral_size());
        fg.forward(f.slice(k), hat);
        apply_symbol(fg, hat, work, out.slice(k),
                     [&](std::size_t i) { return Complex(-kTwoPi * kTwoPi * fg.norm2(i), 0.0); });
    });
    return out;
}

VectorField antidivergence(const ScalarField& f) {
    f.require_finite("antidivergence");
    const auto& spec = f.spec();
    for (std::size_t k = 0; k < spec.nt; ++k) {
        const double mean = spatial_mean(f, k);
        const double l2 = lp_norm(f, 2.0, k);
        if (std::abs(mean) > 1e-10 * l2) {
            throw PreconditionError("antidivergence: slice " + std::to_string(k) + " has spatial mean " +
                                    std::to_string(mean) + "; subtract the mean first");
        }
    }
    const auto& fg = fourier_for(spec);
    VectorField out(spec);
    for_each_slice(spec.nt, [&](std::size_t k) {
        std::vector<Complex> hat(fg.spectral_size()), work(fg.spectral_size());
        fg.forward(f.slice(k), hat);
        for (int j = 0; j < spec.dim; ++j) {
            // symbol of d_j Laplacian^{-1}: (2 pi i k_j) / (-4 pi^2 |k|^2)
            apply_symbol(fg, hat, work, out[j].slice(k), [&](std::size_t i) {
                const double k2 = fg.derivative_norm2(i);
                if (k2 == 0.0) return Complex(0.0, 0.0);
                return Complex(0.0, -fg.derivative_wavenumber(j, i) / (kTwoPi * k2));
            });
        }
    });
    return out;
}

VectorField leray_project(const VectorField& v) {
    v.require_finite("leray_project");
    const auto& spec = v.spec();
    const auto& fg = fourier_for(spec);
    const int d = spec.dim;
    VectorField out(spec);
    for_each_slice(spec.nt, [&](std::size_t k) {
        std::vector<std::vector<Complex>> hat(static_cast<std::size_t>(d), std::vector<Complex>(fg.spectral_size()));
        std::vector<Complex> work(fg.spectral_size());
        for (int j = 0; j < d; ++j) fg.forward(v[j].slice(k), hat[static_cast<std::size_t>(j)]);
        for (int j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < fg.spectral_size(); ++i) {
                const double k2 = fg.derivative_norm2(i);
                Complex value = hat[static_cast<std::size_t>(j)][i];
                if (k2 > 0.0) {
                    Complex kv(0.0, 0.0);
                    for (int l = 0; l < d; ++l) {
                        kv += static_cast<double>(fg.derivative_wavenumber(l, i)) * hat[static_cast<std::size_t>(l)][i];
                    }
                    value -= static_cast<double>(fg.derivative_wavenumber(j, i)) * kv / k2;
                }
                work[i] = value;
            }
            fg.inverse(work, out[j].slice(k));
        }
    });
    return out;
}

ScalarField lowpass(const ScalarField& f, double cutoff) {
    f.require_finite("lowpass");
    const auto& spec = f.spec();
    const auto& fg = fourier_for(spec);
    const double c2 = cutoff * cutoff;
    ScalarField out(spec);
    for_each_slice(spec.nt, [&](std::size_t k) {
        std::vector<Complex> hat(fg.spectral_size()), work(fg.spectral_size());
        fg.forward(f.slice(k), hat);
        apply_symbol(fg, hat, work, out.slice(k),
                     [&](std::size_t i) { return Complex(fg.norm2(i) <= c2 ? 1.0 : 0.0, 0.0); });
    });
    return out;
}

ScalarField time_derivative(const ScalarField& f) {
    f.require_finite("time_derivative");
    const auto& spec = f.spec();
    if (spec.nt < 3) throw PreconditionError("time_derivative: need at least 3 time slices");
    if (!(spec.t_end > 0.0)) throw PreconditionError("time_derivative: time horizon must be positive");
    const double inv = 1.0 / (2.0 * spec.dt());
    const std::size_t last = spec.nt - 1;
    ScalarField out(spec);
    for (std::size_t k = 0; k <= last; ++k) {
        auto o = out.slice(k);
        if (k == 0) {
            auto f0 = f.slice(0), f1 = f.slice(1), f2 = f.slice(2);
            parallel::for_each_index(o.size(), [&](std::size_t i) { o[i] = (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) * inv; });
        } else if (k == last) {
            auto f0 = f.slice(last), f1 = f.slice(last - 1), f2 = f.slice(last - 2);
            parallel::for_each_index(o.size(), [&](std::size_t i) { o[i] = (3.0 * f0[i] - 4.0 * f1[i] + f2[i]) * inv; });
        } else {
            auto fp = f.slice(k + 1), fm = f.slice(k - 1);
            parallel::for_each_index(o.size(), [&](std::size_t i) { o[i] = (fp[i] - fm[i]) * inv; });
        }
    }
    return out;
}

std::vector<double> jacobian_frobenius2(const VectorField& v, std::size_t slice) {
    const auto& spec = v.spec();
    const auto& fg = fourier_for(spec);
    const std::size_t m = spec.points();
    std::vector<double> out(m, 0.0), partial_buf(m);
    std::vector<Complex> hat(fg.spectral_size()), work(fg.spectral_size());
    for (int c = 0; c < spec.dim; ++c) {
        fg.forward(v[c].slice(slice), hat);
        for (int j = 0; j < spec.dim; ++j) {
            apply_symbol(fg, hat, work, partial_buf, [&](std::size_t i) {
                return Complex(0.0, kTwoPi * fg.derivative_wavenumber(j, i));
            });
            parallel::for_each_index(m, [&](std::size_t i) { out[i] += partial_buf[i] * partial_buf[i]; });
        }
    }
    return out;
}

}  // namespace mikado
