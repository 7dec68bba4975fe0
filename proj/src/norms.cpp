#include "mikado/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mikado/error.hpp"
#include "mikado/parallel.hpp"
#include "mikado/spectral.hpp"

namespace mikado {

namespace {

void check_exponent(double p, const char* op) {
    if (std::isnan(p) || p < 1.0) {
        throw InvalidArgument(std::string(op) + ": exponent must be >= 1 or infinite, got " + std::to_string(p));
    }
}

void check_slice(const GridSpec& spec, std::size_t slice, const char* op) {
    if (slice >= spec.nt) throw InvalidArgument(std::string(op) + ": slice index out of range");
}

}  // namespace

double lp_norm(std::span<const double> values, double p, double cell_volume) {
    check_exponent(p, "lp_norm");
    const std::size_t m = values.size();
    const double peak = parallel::max(m, [&](std::size_t i) { return std::abs(values[i]); });
    if (std::isinf(p) || peak == 0.0) return peak;
    double sum = 0.0;
    if (p == 1.0) {
        sum = parallel::sum(m, [&](std::size_t i) { return std::abs(values[i]) / peak; });
    } else if (p == 2.0) {
        sum = parallel::sum(m, [&](std::size_t i) {
            const double r = values[i] / peak;
            return r * r;
        });
    } else {
        sum = parallel::sum(m, [&](std::size_t i) { return std::pow(std::abs(values[i]) / peak, p); });
    }
    return peak * std::pow(cell_volume * sum, 1.0 / p);
}

double lp_norm(const ScalarField& f, double p, std::size_t slice) {
    check_exponent(p, "lp_norm");
    check_slice(f.spec(), slice, "lp_norm");
    return lp_norm(f.slice(slice), p, f.spec().cell_volume());
}

double lp_norm_sup_time(const ScalarField& f, double p) {
    double best = 0.0;
    for (std::size_t k = 0; k < f.spec().nt; ++k) best = std::max(best, lp_norm(f, p, k));
    return best;
}

double lp_norm(const VectorField& v, double p, std::size_t slice) {
    check_exponent(p, "lp_norm");
    check_slice(v.spec(), slice, "lp_norm");
    const std::size_t m = v.spec().points();
    std::vector<double> length(m, 0.0);
    for (int j = 0; j < v.dim(); ++j) {
        auto c = v[j].slice(slice);
        parallel::for_each_index(m, [&](std::size_t i) { length[i] += c[i] * c[i]; });
    }
    parallel::for_each_index(m, [&](std::size_t i) { length[i] = std::sqrt(length[i]); });
    return lp_norm(length, p, v.spec().cell_volume());
}

double sobolev_seminorm(const VectorField& v, double p_tilde, std::size_t slice) {
    check_exponent(p_tilde, "sobolev_seminorm");
    check_slice(v.spec(), slice, "sobolev_seminorm");
    v.require_finite("sobolev_seminorm");
    auto frob = jacobian_frobenius2(v, slice);
    parallel::for_each_index(frob.size(), [&](std::size_t i) { frob[i] = std::sqrt(frob[i]); });
    return lp_norm(frob, p_tilde, v.spec().cell_volume());
}

double spatial_mean(const ScalarField& f, std::size_t slice) {
    check_slice(f.spec(), slice, "spatial_mean");
    auto s = f.slice(slice);
    return f.spec().cell_volume() * parallel::sum(s.size(), [&](std::size_t i) { return s[i]; });
}

}  // namespace mikado
