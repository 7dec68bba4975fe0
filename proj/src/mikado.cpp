#include "mikado/mikado.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mikado/error.hpp"
#include "mikado/parallel.hpp"
#include "mikado/spectral.hpp"

namespace mikado {

namespace {

double wrap_half(double v) { return v - std::floor(v + 0.5); }

/// Maps a grid point to mu * wrap(lambda x - offset), the block's own coordinates.
struct CellMap {
    int dim;
    std::size_t n;
    long lambda;
    double mu;
    Point offset{};

    CellMap(const MikadoSpec& spec, const GridSpec& grid)
        : dim(grid.dim), n(grid.n), lambda(spec.lambda), mu(spec.mu) {
        for (std::size_t a = 0; a < spec.offset.size(); ++a) offset[a] = spec.offset[a];
    }

    void operator()(std::size_t index, Point& y) const {
        for (int a = dim - 1; a >= 0; --a) {
            const std::size_t i = index % n;
            index /= n;
            // lambda * i mod N is exact, so every copy sees identical samples.
            const auto lam = static_cast<unsigned long long>(lambda) % n;
            const double frac = static_cast<double>((lam * i) % n) / static_cast<double>(n);
            y[static_cast<std::size_t>(a)] = mu * wrap_half(frac - offset[static_cast<std::size_t>(a)]);
        }
    }
};

double transverse_radius(const Point& y, int dim, int skip) {
    double r2 = 0.0;
    for (int a = 0; a < dim; ++a) {
        if (a != skip) r2 += y[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(a)];
    }
    return std::sqrt(r2);
}

/// Evaluates g(y) at slice 0 and copies it to every slice of `grid`.
template <class G>
ScalarField sample_static(const MikadoSpec& spec, const GridSpec& grid, G&& g) {
    ScalarField out(grid);
    const CellMap map(spec, grid);
    auto s0 = out.slice(0);
    parallel::for_each_index(grid.points(), [&](std::size_t i) {
        Point y{};
        map(i, y);
        s0[i] = g(y);
    });
    for (std::size_t k = 1; k < grid.nt; ++k) std::copy(s0.begin(), s0.end(), out.slice(k).begin());
    return out;
}

int transverse_axis(int direction, int d) { return (direction + 1) % d; }

void prepare(const MikadoSpec& spec, const GridSpec& grid) {
    grid.validate();
    spec.validate(grid.dim);
    check_resolution(spec, grid);
}

}  // namespace

std::string_view to_string(MikadoVariant v) { return v == MikadoVariant::Tube ? "tube" : "compact"; }

MikadoVariant parse_variant(std::string_view text) {
    if (text == "tube") return MikadoVariant::Tube;
    if (text == "compact") return MikadoVariant::Compact;
    throw InvalidArgument("variant must be 'tube' or 'compact', got '" + std::string(text) + "'");
}

int concentration_dimension(MikadoVariant v, int d) { return v == MikadoVariant::Tube ? d - 1 : d; }

void MikadoSpec::validate(int d) const {
    profile.validate();
    if (variant == MikadoVariant::Compact && d != 2 && d != 3) {
        throw InvalidArgument("compact Mikado blocks support d = 2 or 3 only, got d = " + std::to_string(d));
    }
    if (d < 2 || d > kMaxDim) throw InvalidArgument("Mikado blocks need 2 <= d <= " + std::to_string(kMaxDim));
    if (direction < 0 || direction >= d) {
        throw InvalidArgument("direction " + std::to_string(direction) + " out of range for d = " + std::to_string(d));
    }
    if (!offset.empty() && offset.size() != static_cast<std::size_t>(d)) {
        throw InvalidArgument("offset must have d = " + std::to_string(d) + " entries");
    }
    for (double o : offset) {
        if (!(o >= 0.0 && o < 1.0)) throw InvalidArgument("offset entries must lie in [0, 1)");
    }
    if (!(mu >= 1.0) || !std::isfinite(mu)) throw InvalidArgument("concentration mu must be >= 1");
    if (lambda < 1) throw InvalidArgument("oscillation lambda must be a positive integer");
    if (!std::isfinite(alpha) || !std::isfinite(beta)) throw InvalidArgument("alpha and beta must be finite");
}

std::size_t required_resolution(const MikadoSpec& spec) {
    return static_cast<std::size_t>(std::ceil(4.0 * static_cast<double>(spec.lambda) * spec.mu / spec.profile.radius - 1e-9));
}

void check_resolution(const MikadoSpec& spec, const GridSpec& grid) {
    const std::size_t need = required_resolution(spec);
    if (grid.n < need) {
        throw ResolutionError("grid N = " + std::to_string(grid.n) + " cannot resolve lambda = " +
                                  std::to_string(spec.lambda) + ", mu = " + std::to_string(spec.mu) +
                                  ", r0 = " + std::to_string(spec.profile.radius) + "; need N >= " +
                                  std::to_string(need),
                              need);
    }
}

ScalarField build_theta(const MikadoSpec& spec, const GridSpec& grid) {
    prepare(spec, grid);
    const double amp = std::pow(spec.mu, spec.alpha);
    const BumpProfile& phi = spec.profile;
    const int d = grid.dim;
    if (spec.variant == MikadoVariant::Tube) {
        return sample_static(spec, grid, [&](const Point& y) {
            return amp * phi.value(transverse_radius(y, d, spec.direction));
        });
    }
    // Tilted bump phi(|y|) (1 - y_m / r0); the tilt makes the flux against the
    // curl field below strictly positive.
    const int m = transverse_axis(spec.direction, d);
    return sample_static(spec, grid, [&](const Point& y) {
        const double r = transverse_radius(y, d, -1);
        return amp * phi.value(r) * (1.0 - y[static_cast<std::size_t>(m)] / phi.radius);
    });
}

VectorField build_w(const MikadoSpec& spec, const GridSpec& grid) {
    prepare(spec, grid);
    const int d = grid.dim;
    const int j = spec.direction;
    const BumpProfile& phi = spec.profile;
    VectorField w(grid);
    if (spec.variant == MikadoVariant::Tube) {
        const double amp = std::pow(spec.mu, spec.beta);
        w[j] = sample_static(spec, grid, [&](const Point& y) { return amp * phi.value(transverse_radius(y, d, j)); });
        return w;
    }
    // Potential (mu^{beta-1} / lambda) phi(|y|); its x-gradient is mu^beta (grad phi)(y).
    const GridSpec flat = grid.spatial();
    const double amp = std::pow(spec.mu, spec.beta - 1.0) / static_cast<double>(spec.lambda);
    const ScalarField potential =
        sample_static(spec, flat, [&](const Point& y) { return amp * phi.value(transverse_radius(y, d, -1)); });
    const int m = transverse_axis(j, d);
    w[j] = broadcast_slice(partial(potential, m), 0, grid);
    w[m] = broadcast_slice(-1.0 * partial(potential, j), 0, grid);
    return w;
}

MikadoPair build_pair(const MikadoSpec& spec, const GridSpec& grid) {
    ScalarField theta = build_theta(spec, grid);
    VectorField w = build_w(spec, grid);
    const double kappa = interaction_mean(theta, w, spec.direction);
    return MikadoPair{std::move(theta), std::move(w), spec.direction, kappa};
}

double interaction_mean(const ScalarField& theta, const VectorField& w, int direction) {
    require_same_grid(theta.spec(), w.spec(), "interaction_mean");
    if (direction < 0 || direction >= w.dim()) {
        throw InvalidArgument("interaction_mean: direction " + std::to_string(direction) + " out of range");
    }
    const auto a = theta.slice(0);
    const auto b = w[direction].slice(0);
    return parallel::sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; }) * theta.spec().cell_volume();
}

double interaction_mean(const MikadoPair& pair) { return interaction_mean(pair.theta, pair.w, pair.direction); }

double reference_kappa(MikadoVariant variant, const BumpProfile& profile, int d) {
    profile.validate();
    if (variant == MikadoVariant::Tube) return profile.power_integral(2.0, d - 1);
    if (d != 2 && d != 3) throw InvalidArgument("compact Mikado blocks support d = 2 or 3 only");
    // Integration by parts: int phi (1 - y_m/r0) d_m phi = ||phi||_2^2 / (2 r0).
    return profile.power_integral(2.0, d) / (2.0 * profile.radius);
}

std::vector<std::vector<double>> place_disjoint(std::span<const int> directions, double r0, int d,
                                                MikadoVariant variant) {
    if (d < 2 || d > kMaxDim) throw InvalidArgument("place_disjoint: d must lie in [2, " + std::to_string(kMaxDim) + "]");
    if (!(r0 > 0.0 && r0 < 0.5)) throw InvalidArgument("place_disjoint: r0 must lie in (0, 1/2)");
    for (int j : directions) {
        if (j < 0 || j >= d) throw InvalidArgument("place_disjoint: direction " + std::to_string(j) + " out of range");
    }
    const std::size_t n = directions.size();
    if (n <= 1) return std::vector<std::vector<double>>(n, std::vector<double>(static_cast<std::size_t>(d), 0.0));

    const double nd = static_cast<double>(n);
    std::vector<std::vector<double>> out;
    out.reserve(n);
    if (variant == MikadoVariant::Tube) {
        const std::set<int> distinct(directions.begin(), directions.end());
        if (d == 2 && distinct.size() > 1) {
            throw PreconditionError("place_disjoint: periodic tubes in distinct directions always intersect when d = 2");
        }
        // Diagonal shifts i/n: any two tube axes differ by at least 1/n in a
        // coordinate transverse to both.
        if (!(2.0 * r0 < 1.0 / nd)) {
            throw PreconditionError("place_disjoint: " + std::to_string(n) + " tubes need r0 < " +
                                    std::to_string(0.5 / nd));
        }
        for (std::size_t i = 0; i < n; ++i) out.emplace_back(static_cast<std::size_t>(d), static_cast<double>(i) / nd);
        return out;
    }
    // Bump centres on the diagonal at (i + 1/2)/n; pairwise distance >= sqrt(d)/n.
    if (!(2.0 * r0 < std::sqrt(static_cast<double>(d)) / nd)) {
        throw PreconditionError("place_disjoint: " + std::to_string(n) + " bumps in d = " + std::to_string(d) +
                                " need r0 < " + std::to_string(0.5 * std::sqrt(static_cast<double>(d)) / nd));
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(static_cast<std::size_t>(d), (static_cast<double>(i) + 0.5) / nd);
    }
    return out;
}

}  // namespace mikado
