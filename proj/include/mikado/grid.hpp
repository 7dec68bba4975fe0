#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace mikado {

/// Largest spatial dimension the field containers accept.
inline constexpr int kMaxDim = 4;

using Point = std::array<double, kMaxDim>;

/// Uniform periodic grid on the unit torus [0,1)^d, optionally time-sliced on [0,T].
struct GridSpec {
    int dim = 2;
    std::size_t n = 64;       // points per axis
    std::size_t nt = 1;       // time slices
    double t_end = 0.0;       // time horizon T

    void validate() const;

    double h() const { return 1.0 / static_cast<double>(n); }
    double dt() const { return t_end / static_cast<double>(nt > 1 ? nt - 1 : 1); }
    double time(std::size_t slice) const { return static_cast<double>(slice) * dt(); }
    double cell_volume() const;
    std::size_t points() const;
    std::size_t samples() const { return points() * nt; }

    /// Same spatial grid with a single time slice at t = 0.
    GridSpec spatial() const { return GridSpec{dim, n, 1, 0.0}; }

    /// Coordinates of the grid point with row-major linear index `index` (axis 0 slowest).
    void coordinates(std::size_t index, Point& x) const;

    bool operator==(const GridSpec&) const = default;
};

/// Real samples of a periodic function, laid out slice-major then row-major in space.
class ScalarField {
public:
    explicit ScalarField(const GridSpec& spec);
    ScalarField(const GridSpec& spec, std::vector<double> values);

    /// Samples `f(t, x)` at every slice and grid point.
    template <class F>
    static ScalarField sample(const GridSpec& spec, F&& f);

    const GridSpec& spec() const { return spec_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    std::span<const double> slice(std::size_t k) const;
    std::span<double> slice(std::size_t k);

    /// Throws PreconditionError naming `op` if any sample is NaN or infinite.
    void require_finite(std::string_view op) const;

private:
    GridSpec spec_;
    std::vector<double> values_;
};

/// d scalar components sharing one grid.
class VectorField {
public:
    explicit VectorField(const GridSpec& spec);
    explicit VectorField(std::vector<ScalarField> components);

    const GridSpec& spec() const { return spec_; }
    int dim() const { return spec_.dim; }
    const ScalarField& operator[](int j) const { return components_[static_cast<std::size_t>(j)]; }
    ScalarField& operator[](int j) { return components_[static_cast<std::size_t>(j)]; }
    const std::vector<ScalarField>& components() const { return components_; }

    void require_finite(std::string_view op) const;

private:
    GridSpec spec_;
    std::vector<ScalarField> components_;
};

void require_same_grid(const GridSpec& a, const GridSpec& b, std::string_view op);

// Pointwise arithmetic.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double s, const VectorField& a);

/// Pointwise dot product u . v.
ScalarField dot(const VectorField& u, const VectorField& v);

/// Copies one time slice of `f` into every slice of a field on `target`.
ScalarField broadcast_slice(const ScalarField& f, std::size_t slice, const GridSpec& target);

template <class F>
ScalarField ScalarField::sample(const GridSpec& spec, F&& f) {
    ScalarField out(spec);
    const std::size_t m = spec.points();
    for (std::size_t k = 0; k < spec.nt; ++k) {
        const double t = spec.time(k);
        auto s = out.slice(k);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
            Point x{};
            spec.coordinates(static_cast<std::size_t>(i), x);
            s[static_cast<std::size_t>(i)] = f(t, x);
        }
    }
    return out;
}

}  // namespace mikado
