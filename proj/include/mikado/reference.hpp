#pragma once

// Serial reference kernels. They share no code with the FFT/OpenMP path and
// exist so tests and benchmarks can check the production kernels against a
// plain implementation.

#include <cstddef>
#include <span>
#include <vector>

#include "mikado/grid.hpp"

namespace mikado::reference {

/// Fourier derivative along `axis` of one slice, by direct O(N^2) DFTs on
/// every grid line. The Nyquist mode is dropped as in the FFT path.
std::vector<double> partial(std::span<const double> slice, int dim, std::size_t n, int axis);

/// Plain loop L^p norm (no rescaling, no blocking).
double lp_norm(std::span<const double> values, double p, double cell_volume);

double spatial_mean(std::span<const double> values, double cell_volume);

/// Divergence of one slice built from `partial`.
std::vector<double> divergence(const VectorField& v, std::size_t slice);

}  // namespace mikado::reference
