#include <benchmark/benchmark.h>

#include "irrs/dense.hpp"

using namespace irrs;

static Graph bench_graph(int n) { return generate_min_degree_random(n, 0.6, n / 3, 99); }

static void BM_plan_intervals(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    auto plan = plan_intervals(n, n / 3, 3, {.t = 24000.0, .lambda = 3});
    benchmark::DoNotOptimize(plan.interval_count);
  }
}
BENCHMARK(BM_plan_intervals)->Arg(1000)->Arg(100000);

static void BM_sample_partition(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const auto plan = plan_intervals(g.n, g.min_degree(), 3, {.t = 24000.0, .lambda = 3});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto st = sample_partition(g, plan, ++seed, {});
    benchmark::DoNotOptimize(st.small_vertices.size());
  }
}
BENCHMARK(BM_sample_partition)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_check_events(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const auto plan = plan_intervals(g.n, g.min_degree(), 3, {.t = 24000.0, .lambda = 3});
  const auto st = sample_partition(g, plan, 1, {});
  for (auto _ : state) {
    auto rep = check_events(g, st, plan);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_check_events)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_edge_pools(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const auto plan = plan_intervals(g.n, g.min_degree(), 3, {.t = 24000.0, .lambda = 3});
  const auto st = sample_partition(g, plan, 1, {.y_prob = 0.5});
  for (auto _ : state) {
    auto pools = build_edge_pools(g, st.small_vertices);
    benchmark::DoNotOptimize(pools.pool.size());
  }
}
BENCHMARK(BM_edge_pools)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_pipeline_failure_path(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  DenseConfig cfg;
  cfg.plan.t = 24000.0;
  cfg.plan.lambda = 3;
  cfg.sample.x_const = 0.0;
  cfg.sample.y_prob = 1.0;
  cfg.slacks.small_interval = 1e12;
  cfg.slacks.small_degree = 1e12;
  cfg.max_trials = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto rep = run_pipeline(g, 3, ++seed, cfg);
    benchmark::DoNotOptimize(rep.outcome);
  }
}
BENCHMARK(BM_pipeline_failure_path)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
