#include "mikado/grid.hpp"

#include <cmath>
#include <string>

#include "mikado/error.hpp"
#include "mikado/parallel.hpp"

namespace mikado {

void GridSpec::validate() const {
    if (dim < 1 || dim > kMaxDim) {
        throw InvalidArgument("grid: dimension must be in [1, " + std::to_string(kMaxDim) +
                              "], got " + std::to_string(dim));
    }
    if (n < 2) throw InvalidArgument("grid: N must be >= 2, got " + std::to_string(n));
    if (nt < 1) throw InvalidArgument("grid: Nt must be >= 1");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw InvalidArgument("grid: time horizon T must be finite and >= 0");
    }
    // Guard against absurd allocations before anything is sampled.
    double total = static_cast<double>(nt);
    for (int j = 0; j < dim; ++j) total *= static_cast<double>(n);
    if (total > 4.0e9) throw InvalidArgument("grid: Nt * N^d exceeds the supported sample count");
}

double GridSpec::cell_volume() const {
    return std::pow(h(), dim);
}

std::size_t GridSpec::points() const {
    std::size_t m = 1;
    for (int j = 0; j < dim; ++j) m *= n;
    return m;
}

void GridSpec::coordinates(std::size_t index, Point& x) const {
    const double step = h();
    for (int j = dim - 1; j >= 0; --j) {
        x[static_cast<std::size_t>(j)] = static_cast<double>(index % n) * step;
        index /= n;
    }
    for (int j = dim; j < kMaxDim; ++j) x[static_cast<std::size_t>(j)] = 0.0;
}

ScalarField::ScalarField(const GridSpec& spec) : spec_(spec) {
    spec_.validate();
    values_.assign(spec_.samples(), 0.0);
}

ScalarField::ScalarField(const GridSpec& spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
    spec_.validate();
    if (values_.size() != spec_.samples()) {
        throw InvalidArgument("scalar field: expected " + std::to_string(spec_.samples()) +
                              " samples, got " + std::to_string(values_.size()));
    }
    require_finite("scalar field construction");
}

std::span<const double> ScalarField::slice(std::size_t k) const {
    const std::size_t m = spec_.points();
    return std::span<const double>(values_).subspan(k * m, m);
}

std::span<double> ScalarField::slice(std::size_t k) {
    const std::size_t m = spec_.points();
    return std::span<double>(values_).subspan(k * m, m);
}

void ScalarField::require_finite(std::string_view op) const {
    const double bad = parallel::sum(values_.size(),
                                     [&](std::size_t i) { return std::isfinite(values_[i]) ? 0.0 : 1.0; });
    if (bad > 0.0) {
        throw PreconditionError(std::string(op) + ": field contains non-finite samples");
    }
}

VectorField::VectorField(const GridSpec& spec) : spec_(spec) {
    spec_.validate();
    components_.reserve(static_cast<std::size_t>(spec_.dim));
    for (int j = 0; j < spec_.dim; ++j) components_.emplace_back(spec_);
}

VectorField::VectorField(std::vector<ScalarField> components) : components_(std::move(components)) {
    if (components_.empty()) throw InvalidArgument("vector field: no components");
    spec_ = components_.front().spec();
    if (static_cast<int>(components_.size()) != spec_.dim) {
        throw InvalidArgument("vector field: expected " + std::to_string(spec_.dim) + " components, got " +
                              std::to_string(components_.size()));
    }
    for (const auto& c : components_) require_same_grid(spec_, c.spec(), "vector field");
}

void VectorField::require_finite(std::string_view op) const {
    for (const auto& c : components_) c.require_finite(op);
}

void require_same_grid(const GridSpec& a, const GridSpec& b, std::string_view op) {
    if (!(a == b)) throw InvalidArgument(std::string(op) + ": fields live on different grids");
}

namespace {

template <class Op>
ScalarField combine(const ScalarField& a, const ScalarField& b, Op op, std::string_view name) {
    require_same_grid(a.spec(), b.spec(), name);
    ScalarField out(a.spec());
    auto o = out.values();
    auto x = a.values();
    auto y = b.values();
    parallel::for_each_index(o.size(), [&](std::size_t i) { o[i] = op(x[i], y[i]); });
    return out;
}

template <class Op>
VectorField combine(const VectorField& a, const VectorField& b, Op op, std::string_view name) {
    require_same_grid(a.spec(), b.spec(), name);
    std::vector<ScalarField> comps;
    for (int j = 0; j < a.dim(); ++j) comps.push_back(combine(a[j], b[j], op, name));
    return VectorField(std::move(comps));
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return combine(a, b, [](double x, double y) { return x + y; }, "add");
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return combine(a, b, [](double x, double y) { return x - y; }, "subtract");
}

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField out(a.spec());
    auto o = out.values();
    auto x = a.values();
    parallel::for_each_index(o.size(), [&](std::size_t i) { o[i] = s * x[i]; });
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    return combine(a, b, [](double x, double y) { return x + y; }, "add");
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    return combine(a, b, [](double x, double y) { return x - y; }, "subtract");
}

VectorField operator*(double s, const VectorField& a) {
    std::vector<ScalarField> comps;
    for (int j = 0; j < a.dim(); ++j) comps.push_back(s * a[j]);
    return VectorField(std::move(comps));
}

ScalarField dot(const VectorField& u, const VectorField& v) {
    require_same_grid(u.spec(), v.spec(), "dot");
    ScalarField out(u.spec());
    auto o = out.values();
    for (int j = 0; j < u.dim(); ++j) {
        auto x = u[j].values();
        auto y = v[j].values();
        parallel::for_each_index(o.size(), [&](std::size_t i) { o[i] += x[i] * y[i]; });
    }
    return out;
}

ScalarField broadcast_slice(const ScalarField& f, std::size_t slice, const GridSpec& target) {
    if (target.dim != f.spec().dim || target.n != f.spec().n) {
        throw InvalidArgument("broadcast: spatial grids differ");
    }
    ScalarField out(target);
    auto src = f.slice(slice);
    for (std::size_t k = 0; k < target.nt; ++k) {
        auto dst = out.slice(k);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return out;
}

}  // namespace mikado
