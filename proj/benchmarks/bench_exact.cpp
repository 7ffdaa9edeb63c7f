#include <benchmark/benchmark.h>

#include "irrs/exact.hpp"

using namespace irrs;

static void BM_exact_complete(benchmark::State& state) {
  const Graph g = generate_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = exact_strength(g);
    benchmark::DoNotOptimize(res.nodes);
  }
}
BENCHMARK(BM_exact_complete)->DenseRange(4, 7);

static void BM_exact_petersen(benchmark::State& state) {
  const Graph g = generate_petersen();
  for (auto _ : state) {
    auto res = exact_strength(g);
    benchmark::DoNotOptimize(res.nodes);
  }
}
BENCHMARK(BM_exact_petersen)->Unit(benchmark::kMillisecond);

static void BM_find_weighting_circulant(benchmark::State& state) {
  const Graph g = generate_circulant(static_cast<int>(state.range(0)), {1, 2});
  for (auto _ : state) {
    auto res = find_weighting(g, 3);
    benchmark::DoNotOptimize(res.outcome);
  }
}
BENCHMARK(BM_find_weighting_circulant)->Arg(8)->Arg(10)->Arg(12);

static void BM_random_greedy(benchmark::State& state) {
  const Graph g = generate_min_degree_random(static_cast<int>(state.range(0)), 0.5, 3, 7);
  for (auto _ : state) {
    auto res = random_greedy(g, 4, 11, 20);
    benchmark::DoNotOptimize(res.found);
  }
}
BENCHMARK(BM_random_greedy)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
