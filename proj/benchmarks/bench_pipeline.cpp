// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the planarnf authors

#include <benchmark/benchmark.h>

#include "planarnf/planarnf.hpp"

using namespace planarnf;

namespace {

std::shared_ptr<const SphericalGrid> bench_grid(int count) {
    return std::make_shared<SphericalGrid>(
        make_spherical_grid(count, deg_to_rad(60.0)));
}

void BM_GreenPrime(benchmark::State& state) {
    const double k0 = wavenumber(28e9);
    double r = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(green_prime(r, k0));
        r += 1e-9;
    }
}
BENCHMARK(BM_GreenPrime);

void BM_SphericalGrid(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(make_spherical_grid(count, deg_to_rad(60.0)));
}
BENCHMARK(BM_SphericalGrid)->Arg(1000)->Arg(4000);

void BM_AssembleOperator(benchmark::State& state) {
    // raster edge scales with the argument; direction count fixed
    const int n = static_cast<int>(state.range(0));
    const ScanGeometry g(n, n, 5e-3, 5e-3, 2e-2);
    auto grid = bench_grid(256);
    const double k0 = wavenumber(28e9);
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_operator(g, grid, 2.0, k0));
    state.SetItemsProcessed(state.iterations() * grid->size() * g.point_count());
}
BENCHMARK(BM_AssembleOperator)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_TransformApply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ScanGeometry g(n, n, 5e-3, 5e-3, 2e-2);
    auto grid = bench_grid(1024);
    const double k0 = wavenumber(28e9);
    const auto op = assemble_operator(g, grid, 2.0, k0);
    const auto scan = sample_near_field(
        {{{0.0, 0.0, 0.0}, cdouble(1.0), Orientation::y}}, g, k0);
    const auto currents = equivalent_currents(scan);
    for (auto _ : state)
        benchmark::DoNotOptimize(transform(currents, op));
    state.SetItemsProcessed(state.iterations() * 4 * grid->size() * g.point_count());
}
BENCHMARK(BM_TransformApply)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_EqualGainCombine(benchmark::State& state) {
    auto grid = bench_grid(4000);
    const double k0 = wavenumber(28e9);
    const double lambda = wavelength(28e9);
    std::vector<FarFieldPattern> patterns;
    for (int m = 0; m < 8; ++m) {
        auto p = analytic_far_field(
            {{{(m - 3.5) * lambda / 2.0, 0.0, 0.0}, cdouble(1.0), Orientation::y}},
            grid, 2.0, k0);
        p.port = std::to_string(m);
        patterns.push_back(std::move(p));
    }
    const PortPatternSet ports(std::move(patterns));
    for (auto _ : state)
        benchmark::DoNotOptimize(spherical_coverage(ports));
}
BENCHMARK(BM_EqualGainCombine)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
