#include <benchmark/benchmark.h>

#include "obsdesign/mesh.hpp"
#include "obsdesign/mode_mass.hpp"
#include "obsdesign/modes.hpp"

using namespace obsdesign;

/// Square Dirichlet window N x N on an n x n mesh with 3-point Gauss.
static void BM_ModeMassSquare(benchmark::State& state) {
    const DomainSpec d{DomainKind::Square2D, Boundary::Dirichlet};
    const Mesh mesh = build_mesh(d, static_cast<int>(state.range(0)));
    const auto modes = window_modes(d, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(mode_mass(mesh, modes, 3));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh.size() * modes.size()));
}
BENCHMARK(BM_ModeMassSquare)->Args({64, 5})->Args({256, 10})->Args({256, 20})->Unit(benchmark::kMillisecond);

static void BM_ModeMassDisk(benchmark::State& state) {
    const DomainSpec d{DomainKind::Disk2D, Boundary::Dirichlet};
    const Mesh mesh = build_mesh(d, static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)));
    const auto modes = window_modes(d, 5);
    for (auto _ : state) benchmark::DoNotOptimize(mode_mass(mesh, modes, 1));
}
BENCHMARK(BM_ModeMassDisk)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
