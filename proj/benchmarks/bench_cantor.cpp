#include <benchmark/benchmark.h>

#include "obsdesign/cantor.hpp"
#include "obsdesign/mesh.hpp"

using namespace obsdesign;

static void BM_CantorCoefficients(benchmark::State& state) {
    const auto set = build_cantor(CantorParams{});
    for (auto _ : state) benchmark::DoNotOptimize(cantor_coefficients(set, state.range(0)));
}
BENCHMARK(BM_CantorCoefficients)->Arg(5000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_CantorEnergyDensity(benchmark::State& state) {
    const auto set = build_cantor(CantorParams{});
    const auto c = cantor_coefficients(set, state.range(0));
    const Mesh mesh = build_mesh(DomainSpec{DomainKind::Interval1D, Boundary::Dirichlet}, 8192);
    for (auto _ : state) benchmark::DoNotOptimize(cantor_energy_density(c.a, mesh));
}
BENCHMARK(BM_CantorEnergyDensity)->Arg(5000)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
