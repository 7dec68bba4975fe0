#pragma once

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <vector>

namespace mikado {

using Complex = std::complex<double>;

/// Real-to-complex transforms on the d-dimensional periodic grid with N points
/// per axis. One instance per (d, N) is cached for the lifetime of the process;
/// transforms may be executed concurrently from any number of threads.
class FourierGrid {
public:
    static const FourierGrid& instance(int dim, std::size_t n);

    FourierGrid(const FourierGrid&) = delete;
    FourierGrid& operator=(const FourierGrid&) = delete;
    ~FourierGrid();

    int dim() const { return dim_; }
    std::size_t n() const { return n_; }
    std::size_t real_size() const { return real_size_; }
    std::size_t spectral_size() const { return spectral_size_; }

    /// Unnormalized forward transform; `in` is left intact.
    void forward(std::span<const double> in, std::span<Complex> out) const;

    /// Normalized inverse transform (so inverse(forward(f)) == f). Destroys `in`.
    void inverse(std::span<Complex> in, std::span<double> out) const;

    /// Integer wavenumber of spectral coefficient `index` along `axis`.
    int wavenumber(int axis, std::size_t index) const {
        return wavenumbers_[static_cast<std::size_t>(axis)][index];
    }

    /// Wavenumber used by odd-order derivatives: the Nyquist entry is zeroed.
    int derivative_wavenumber(int axis, std::size_t index) const {
        const int k = wavenumber(axis, index);
        return (n_ % 2 == 0 && 2 * std::abs(k) == static_cast<int>(n_)) ? 0 : k;
    }

    /// |k|^2 for coefficient `index`.
    double norm2(std::size_t index) const;

    /// |k~|^2 using derivative wavenumbers.
    double derivative_norm2(std::size_t index) const;

private:
    FourierGrid(int dim, std::size_t n);

    int dim_;
    std::size_t n_;
    std::size_t real_size_;
    std::size_t spectral_size_;
    std::vector<std::vector<int>> wavenumbers_;
    void* forward_plan_ = nullptr;
    void* inverse_plan_ = nullptr;
};

}  // namespace mikado
