#pragma once

#include <cstddef>
#include <limits>
#include <span>

#include "mikado/grid.hpp"

namespace mikado {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (h^d sum |v|^p)^{1/p}, or max |v| when p is infinite. Accumulates in
/// max-scaled form so large exponents do not overflow.
double lp_norm(std::span<const double> values, double p, double cell_volume);

/// L^p norm of one time slice. Throws InvalidArgument for p < 1.
double lp_norm(const ScalarField& f, double p, std::size_t slice);

/// Largest L^p norm over all time slices.
double lp_norm_sup_time(const ScalarField& f, double p);

/// L^p norm of |v| (Euclidean length) at one slice.
double lp_norm(const VectorField& v, double p, std::size_t slice);

/// L^{p~} norm of the Frobenius norm of the full Jacobian Dv at one slice.
double sobolev_seminorm(const VectorField& v, double p_tilde, std::size_t slice);

/// h^d sum f at one slice.
double spatial_mean(const ScalarField& f, std::size_t slice);

}  // namespace mikado
