#pragma once

#include <cstddef>
#include <vector>

#include "mikado/grid.hpp"

namespace mikado {

struct ProbeReport {
    std::size_t particles = 0;
    std::vector<double> defects;  // |rho(T, X(T, x)) - rho(0, x)| per particle
    std::vector<double> bounds;   // trapezoidal integral of |E| along each trajectory
    double max_defect = 0.0;
    double mean_defect = 0.0;
    double mean_bound = 0.0;
};

/// Multilinear interpolation of one time slice at a periodic point.
double interpolate(const ScalarField& f, std::size_t slice, const Point& x);

/// Integrates dX/dt = u(t, X) with classical RK4 from seeds on a uniform
/// sub-lattice of about `particles` grid nodes (s^d nodes, s = floor of the
/// d-th root). u is interpolated multilinearly in space and linearly in time.
/// Slice 0 of rho is the initial datum, the last slice the final density;
/// the residual along trajectories is computed from (rho, u). Needs Nt >= 3.
ProbeReport lagrangian_probe(const VectorField& u, const ScalarField& rho, std::size_t particles, std::size_t rk_steps);

}  // namespace mikado
