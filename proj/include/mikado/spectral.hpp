#pragma once

#include "mikado/grid.hpp"

namespace mikado {

// Spectral calculus on the periodic grid. All spatial operators act slice by
// slice and multiply Fourier mode k by the operator symbol; odd derivatives
// drop the Nyquist mode. Every function rejects non-finite input.

/// d f / d x_axis.
ScalarField partial(const ScalarField& f, int axis);

/// Component j is the Fourier derivative of f along axis j.
VectorField gradient(const ScalarField& f);

/// Sum of the Fourier derivatives d_j v_j.
ScalarField divergence(const VectorField& v);

/// Multiplies mode k by -4 pi^2 |k|^2.
ScalarField laplacian(const ScalarField& f);

/// R = grad Laplacian^{-1} f in the mean-free gauge, so that div R = f.
/// Throws PreconditionError when a slice mean exceeds 1e-10 ||f||_2.
VectorField antidivergence(const ScalarField& f);

/// Divergence-free part of v (Leray projection); the spatial mean is kept.
VectorField leray_project(const VectorField& v);

/// Keeps Fourier modes with |k| <= cutoff.
ScalarField lowpass(const ScalarField& f, double cutoff);

/// Second-order finite differences across time slices: centered in the
/// interior, one-sided at both ends. Needs Nt >= 3 and T > 0.
ScalarField time_derivative(const ScalarField& f);

/// Squared Frobenius norm of the spatial Jacobian of v at one time slice.
std::vector<double> jacobian_frobenius2(const VectorField& v, std::size_t slice);

}  // namespace mikado
