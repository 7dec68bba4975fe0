// Production kernels (FFTW + OpenMP, blocked reductions) against the serial
// reference implementations on the same inputs.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "mikado/grid.hpp"
#include "mikado/norms.hpp"
#include "mikado/reference.hpp"
#include "mikado/spectral.hpp"

using namespace mikado;

namespace {

ScalarField smooth(std::size_t n) {
    const GridSpec g{2, n, 1, 0.0};
    return ScalarField::sample(g, [](double, const Point& x) {
        const double tau = 2.0 * std::numbers::pi;
        return std::sin(tau * x[0]) * std::cos(3.0 * tau * x[1]) + 0.3 * std::cos(tau * (5.0 * x[0] - 2.0 * x[1]));
    });
}

VectorField swirl(std::size_t n) {
    const GridSpec g{2, n, 1, 0.0};
    VectorField v(g);
    v[0] = smooth(n);
    v[1] = 0.5 * smooth(n);
    return v;
}

void BM_partial_fft(benchmark::State& state) {
    const ScalarField f = smooth(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(partial(f, 1));
}

void BM_partial_reference(benchmark::State& state) {
    const ScalarField f = smooth(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::partial(f.slice(0), 2, f.spec().n, 1));
}

void BM_divergence_fft(benchmark::State& state) {
    const VectorField v = swirl(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(divergence(v));
}

void BM_divergence_reference(benchmark::State& state) {
    const VectorField v = swirl(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::divergence(v, 0));
}

void BM_lp_norm_blocked(benchmark::State& state) {
    const ScalarField f = smooth(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lp_norm(f, 1.5, 0));
}

void BM_lp_norm_reference(benchmark::State& state) {
    const ScalarField f = smooth(static_cast<std::size_t>(state.range(0)));
    const double cell = f.spec().cell_volume();
    for (auto _ : state) benchmark::DoNotOptimize(reference::lp_norm(f.slice(0), 1.5, cell));
}

}  // namespace

// The reference derivative is O(N^3) per slice; keep its grids small.
BENCHMARK(BM_partial_fft)->Arg(64)->Arg(128)->Arg(512);
BENCHMARK(BM_partial_reference)->Arg(64)->Arg(128);
BENCHMARK(BM_divergence_fft)->Arg(64)->Arg(128)->Arg(512);
BENCHMARK(BM_divergence_reference)->Arg(64)->Arg(128);
BENCHMARK(BM_lp_norm_blocked)->Arg(128)->Arg(1024);
BENCHMARK(BM_lp_norm_reference)->Arg(128)->Arg(1024);

BENCHMARK_MAIN();
