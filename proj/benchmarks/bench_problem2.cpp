#include <benchmark/benchmark.h>

#include "obsdesign/mesh.hpp"
#include "obsdesign/mode_mass.hpp"
#include "obsdesign/modes.hpp"
#include "obsdesign/problem2.hpp"

using namespace obsdesign;

static void BM_Problem2Square(benchmark::State& state) {
    const DomainSpec d{DomainKind::Square2D, Boundary::Dirichlet};
    const Mesh mesh = build_mesh(d, 64);
    const auto w = mode_mass(mesh, window_modes(d, static_cast<int>(state.range(0))), 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve_problem2(w, w.rows(), 0.4));
}
BENCHMARK(BM_Problem2Square)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SortedFill(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> density(n), measures(n, 1.0);
    for (std::size_t c = 0; c < n; ++c) density[c] = static_cast<double>((c * 2654435761u) % 1000003u);
    for (auto _ : state) benchmark::DoNotOptimize(sorted_fill(density, measures, 0.3 * static_cast<double>(n)));
}
BENCHMARK(BM_SortedFill)->Arg(4096)->Arg(65536)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
