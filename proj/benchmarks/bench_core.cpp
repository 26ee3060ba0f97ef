#include <benchmark/benchmark.h>

#include "spectough/distance.hpp"
#include "spectough/families.hpp"
#include "spectough/sampling.hpp"
#include "spectough/spectral.hpp"
#include "spectough/toughness.hpp"

using namespace spectough;

static void BM_DistanceMatrix(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SplitMix64 rng(12345);
    Graph g = sample_connected({n, 1, 99, 2}).front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_matrix(g));
    }
}
BENCHMARK(BM_DistanceMatrix)->Arg(16)->Arg(32)->Arg(64);

static void BM_SpectralRadius(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = build_extremal(OneTough{n, 2});
    DistanceMatrix d = distance_matrix(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral_radius(d));
    }
}
BENCHMARK(BM_SpectralRadius)->Arg(16)->Arg(32)->Arg(48);

static void BM_ToughnessExact(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = build_extremal(OneTough{n, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(toughness_exact(g, {.limit = n}));
    }
}
BENCHMARK(BM_ToughnessExact)->Arg(12)->Arg(16)->Arg(20);

static void BM_IsOneTough(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = build_extremal(OneTough{n, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_t_tough(g, Rational(1), {.limit = n}));
    }
}
BENCHMARK(BM_IsOneTough)->Arg(16)->Arg(20)->Arg(24);

BENCHMARK_MAIN();
