#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mikado/grid.hpp"
#include "mikado/profile.hpp"

namespace mikado {

/// Tube: the block is constant along e_j and shrinks in the d-1 transverse
/// directions (D = d-1). Compact: a bump localized in all d directions (D = d),
/// available for d = 2 and d = 3.
enum class MikadoVariant { Tube, Compact };

std::string_view to_string(MikadoVariant v);
MikadoVariant parse_variant(std::string_view text);

/// Number of directions in which the block concentrates.
int concentration_dimension(MikadoVariant v, int d);

struct MikadoSpec {
    MikadoVariant variant = MikadoVariant::Compact;
    int direction = 0;
    BumpProfile profile;
    std::vector<double> offset;  // cell coordinates of the tube axis / bump centre; empty means origin
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 1.0;
    long lambda = 1;

    /// Checks every field against a d-dimensional grid (not the resolution).
    void validate(int d) const;
};

/// Smallest N with N >= 4 lambda mu / r0.
std::size_t required_resolution(const MikadoSpec& spec);

/// Throws ResolutionError when the grid is too coarse for `spec`.
void check_resolution(const MikadoSpec& spec, const GridSpec& grid);

/// mu^alpha Theta(mu (lambda x - offset)), wrapped into the unit cell and
/// repeated on every time slice.
ScalarField build_theta(const MikadoSpec& spec, const GridSpec& grid);

/// Divergence-free field mu^beta W(mu (lambda x - offset)). The compact
/// variant is the spectral curl of the sampled potential, so its discrete
/// divergence vanishes to round-off.
VectorField build_w(const MikadoSpec& spec, const GridSpec& grid);

struct MikadoPair {
    ScalarField theta;
    VectorField w;
    int direction;
    double kappa;  // spatial mean of theta * w_j
};

MikadoPair build_pair(const MikadoSpec& spec, const GridSpec& grid);

/// Spatial mean of theta * w_direction on slice 0.
double interaction_mean(const ScalarField& theta, const VectorField& w, int direction);
double interaction_mean(const MikadoPair& pair);

/// Closed-form value of the interaction constant when alpha + beta = D.
double reference_kappa(MikadoVariant variant, const BumpProfile& profile, int d);

/// Offsets (one per entry of `directions`) whose blocks have pairwise disjoint
/// closed supports for every mu >= 1 and lambda. Throws PreconditionError when
/// no such placement exists for these parameters.
std::vector<std::vector<double>> place_disjoint(std::span<const int> directions, double r0, int d,
                                                MikadoVariant variant);

}  // namespace mikado
