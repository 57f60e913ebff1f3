#include <benchmark/benchmark.h>

#include "obsdesign/bessel.hpp"

using namespace obsdesign;

static void BM_BesselJ(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j(n, x));
        x = x < 199.0 ? x + 0.731 : 0.5;
    }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(5)->Arg(40);

/// Table lookup after the one-time table build.
static void BM_BesselZero(benchmark::State& state) {
    benchmark::DoNotOptimize(bessel_zero(0, 1));
    int k = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_zero(static_cast<int>(state.range(0)), k));
        k = k < 40 ? k + 1 : 1;
    }
}
BENCHMARK(BM_BesselZero)->Arg(0)->Arg(20);

BENCHMARK_MAIN();
