#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "../support/synthetic.hpp"
#include "irrs/check.hpp"
#include "irrs/dense.hpp"
#include "irrs/rng.hpp"

using namespace irrs;

// all-ones starting point: sums are plain degrees, every big-small edge reserved
static PartitionState state_from(const Graph& g, const std::vector<std::uint8_t>& in_small) {
  PartitionState st;
  st.in_small = in_small;
  for (int v = 0; v < g.n; ++v)
    (in_small[v] ? st.small_vertices : st.big_vertices).push_back(v);
  st.reserved.assign(g.m(), 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (in_small[u] + in_small[v] == 1) st.reserved[e] = 1;
  }
  st.heavy.assign(g.m(), 0);
  st.small_degree.assign(g.n, 0);
  st.reserved_degree.assign(g.n, 0);
  st.init_sum.assign(g.n, 0);
  st.proxy_sum.assign(g.n, 0.0);
  for (int v = 0; v < g.n; ++v) {
    st.init_sum[v] = g.degree(v);
    st.proxy_sum[v] = g.degree(v);
    for (auto [u, e] : g.adj[v]) {
      st.small_degree[v] += in_small[u];
      st.reserved_degree[v] += st.reserved[e];
    }
  }
  return st;
}

static EdgeWeighting ones(const Graph& g, int k = 3) {
  return EdgeWeighting{std::vector<int>(g.m(), 1), k};
}

// two big stars with 17 leaves each; grid origin 10, width 5
static Graph two_stars(int d0 = 17, int d1 = 17) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < d0; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 0; i < d1; ++i) edges.emplace_back(1, 2 + d0 + i);
  return make_graph(2 + d0 + d1, std::move(edges));
}

TEST_CASE("big adjustment: greedy trace with a shared interval") {
  Graph g = two_stars();
  std::vector<std::uint8_t> small(g.n, 1);
  small[0] = small[1] = 0;
  auto st = state_from(g, small);
  auto plan = plan_intervals(150, 10, 3, {.t = 30.0, .lambda = 3});  // width 5

  auto res = adjust_big_sums(g, st, plan, ones(g));
  auto* out = std::get_if<BigAdjust>(&res);
  REQUIRE(out);
  // both sums start at 17 in [15,20); successor interval [20,25) admits 20 and 23
  CHECK(out->assigned == std::vector<std::pair<int, std::int64_t>>{{0, 20}, {1, 23}});
  CHECK(out->raised == std::vector<std::pair<int, int>>{{0, 3}, {1, 6}});
  auto sums = weighted_degrees(g, out->weighting).sums;
  CHECK(sums[0] == 20);
  CHECK(sums[1] == 23);
  // raises take the lowest reserved edge indices
  for (int e = 0; e < g.m(); ++e) {
    const bool want2 = e < 3 || (e >= 17 && e < 23);
    CHECK(out->weighting.w[e] == (want2 ? 2 : 1));
  }
  CHECK(synth::check_phase2({g, plan, st, ones(g)}, *out).empty());
}

TEST_CASE("big adjustment: a sum on a boundary belongs to the upper interval") {
  Graph g = two_stars(20, 0);
  std::vector<std::uint8_t> small(g.n, 1);
  small[0] = 0;  // vertex 1 stays small; only the degree-20 star is big
  auto st = state_from(g, small);
  auto plan = plan_intervals(150, 10, 3, {.t = 30.0, .lambda = 3});

  // 20 = i_2 lies in I_3 = [20,25), so the target comes from I_4 = [25,30)
  auto res = adjust_big_sums(g, st, plan, ones(g));
  auto* out = std::get_if<BigAdjust>(&res);
  REQUIRE(out);
  CHECK(out->assigned == std::vector<std::pair<int, std::int64_t>>{{0, 26}});  // 25 = 3*8+1 skipped
}

TEST_CASE("big adjustment failures carry the vertex and interval") {
  auto plan = plan_intervals(150, 10, 3, {.t = 30.0, .lambda = 3});

  SUBCASE("interval overflow once the admissible values run out") {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < 17; ++i) edges.emplace_back(v, 3 + 17 * v + i);
    Graph g = make_graph(3 + 51, std::move(edges));
    std::vector<std::uint8_t> small(g.n, 1);
    small[0] = small[1] = small[2] = 0;
    auto st = state_from(g, small);
    auto res = adjust_big_sums(g, st, plan, ones(g));
    auto* f = std::get_if<PhaseFailure>(&res);
    REQUIRE(f);
    CHECK(f->phase == "adjust_big");
    CHECK(f->kind == "interval_overflow");
    CHECK(f->vertex == 2);
    CHECK(f->interval == 3);
  }

  SUBCASE("insufficient reserved edges") {
    Graph g = two_stars(17, 0);
    std::vector<std::uint8_t> small(g.n, 1);
    small[0] = 0;
    auto st = state_from(g, small);
    std::fill(st.reserved.begin(), st.reserved.end(), 0);
    st.reserved[0] = st.reserved[1] = 1;  // only two raisable edges, three needed
    st.reserved_degree[0] = 2;
    auto res = adjust_big_sums(g, st, plan, ones(g));
    auto* f = std::get_if<PhaseFailure>(&res);
    REQUIRE(f);
    CHECK(f->kind == "insufficient_reserved");
    CHECK(f->vertex == 0);
    CHECK(f->interval == 3);
  }

  SUBCASE("sums outside the grid are rejected up front") {
    auto tiny = plan_intervals(15, 10, 3, {.t = 1.5, .lambda = 3});  // I_1..I_5, width 10
    Graph low = two_stars(5, 0);
    std::vector<std::uint8_t> small(low.n, 1);
    small[0] = 0;
    auto st = state_from(low, small);
    auto res = adjust_big_sums(low, st, tiny, ones(low));
    auto* f = std::get_if<PhaseFailure>(&res);
    REQUIRE(f);
    CHECK(f->kind == "sum_outside_grid");

    Graph top = two_stars(55, 0);  // lands in the last interval, which has no successor
    std::vector<std::uint8_t> small2(top.n, 1);
    small2[0] = 0;
    auto st2 = state_from(top, small2);
    auto res2 = adjust_big_sums(top, st2, tiny, ones(top));
    auto* f2 = std::get_if<PhaseFailure>(&res2);
    REQUIRE(f2);
    CHECK(f2->kind == "sum_outside_grid");
    CHECK(f2->vertex == 0);
  }

  SUBCASE("modulus below 3 is a contract violation") {
    auto bad = plan_intervals(150, 10, 3, {.t = 30.0});  // formula lambda = 0
    Graph g = two_stars();
    std::vector<std::uint8_t> small(g.n, 1);
    small[0] = small[1] = 0;
    auto st = state_from(g, small);
    CHECK_THROWS_AS((void)adjust_big_sums(g, st, bad, ones(g)), std::logic_error);
  }
}

TEST_CASE("big adjustment invariants across synthetic states") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int lambda = std::array{3, 5, 7}[seed % 3];
    auto c = synth::make_phase2_case(seed, lambda);
    auto res = adjust_big_sums(c.g, c.st, c.plan, c.w0);
    auto* out = std::get_if<BigAdjust>(&res);
    REQUIRE_MESSAGE(out, "synthetic case unexpectedly failed");
    for (const auto& viol : synth::check_phase2(c, *out)) FAIL_CHECK(viol);
  }
}

TEST_CASE("pool construction: hand-checked micro cases") {
  SUBCASE("triangle: three pools of one distinct edge each") {
    Graph g = generate_complete(3);
    auto pools = build_edge_pools(g, {0, 1, 2});
    std::set<int> all;
    for (const auto& p : pools.pool) {
      CHECK(p.size() == 1);
      all.insert(p[0]);
    }
    CHECK(all == std::set<int>{0, 1, 2});
    CHECK(synth::check_pools(g, {0, 1, 2}, pools).empty());
  }

  SUBCASE("single edge: tail keeps it, head gets nothing") {
    Graph g = make_graph(2, {{0, 1}});
    auto pools = build_edge_pools(g, {0, 1});
    CHECK(pools.pool[0] == std::vector<int>{0});
    CHECK(pools.pool[1].empty());
  }

  SUBCASE("empty class and edgeless class") {
    Graph g = generate_complete(4);
    CHECK(build_edge_pools(g, {}).pool.empty());
    auto pools = build_edge_pools(g, {0});  // no internal edges
    REQUIRE(pools.pool.size() == 1);
    CHECK(pools.pool[0].empty());
  }

  SUBCASE("odd degrees ride through the auxiliary vertex") {
    Graph g = make_graph(3, {{0, 1}, {1, 2}});
    auto pools = build_edge_pools(g, {0, 1, 2});
    CHECK(synth::check_pools(g, {0, 1, 2}, pools).empty());
    int total = 0;
    for (const auto& p : pools.pool) total += (int)p.size();
    CHECK(total == 2);
  }
}

TEST_CASE("pool construction: random subgraphs keep the partition exact") {
  Rng rng(4242);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = generate_min_degree_random(40 + (int)rng.below(40), 0.2 + 0.01 * (double)rng.below(40),
                                         1, derive_seed(777, rep));
    std::vector<int> small;
    for (int v = 0; v < g.n; ++v)
      if (rng.bernoulli(0.5)) small.push_back(v);
    auto pools = build_edge_pools(g, small);
    for (const auto& viol : synth::check_pools(g, small, pools)) FAIL_CHECK(viol);
  }
}

TEST_CASE("dangerous sets") {
  auto plan = plan_intervals(100, 1, 3, {.t = 24000.0, .lambda = 3});
  const double radius = (2.0 * 3 + 2.0) * 100 / std::sqrt(plan.t) + 2.0 * std::sqrt(100.0);

  PartitionState st;
  st.in_small = {1, 1, 0, 1, 1};
  st.small_vertices = {0, 1, 3, 4};
  st.big_vertices = {2};
  st.init_sum = {100, 100, 50, 100, 100};

  SUBCASE("equal sums: everyone else is a rival") {
    auto d = dangerous_sets(st, plan);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == std::vector<int>{1, 3, 4});  // ascending parent ids, self excluded
    CHECK(d[1] == std::vector<int>{0, 3, 4});
    CHECK(d[2] == std::vector<int>{0, 1, 4});
    CHECK(d[3] == std::vector<int>{0, 1, 3});
  }

  SUBCASE("the window is open and symmetric") {
    const auto just_in = (std::int64_t)std::floor(radius);  // 25 < radius ~ 25.16
    st.init_sum = {100, 100 + just_in, 50, 160, 1000};
    auto d = dangerous_sets(st, plan);
    CHECK(d[0] == std::vector<int>{1});
    CHECK(d[1] == std::vector<int>{0});  // symmetry
    CHECK(d[2].empty());                 // 35 away from its nearest class neighbor
    CHECK(d[3].empty());
  }
}

TEST_CASE("small adjustment: isolated class vertex") {
  auto plan = plan_intervals(100, 1, 3, {.t = 24000.0, .lambda = 3});

  // degree 3 is already a multiple of 3: the single-point range works
  Graph g3 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  auto st3 = state_from(g3, {1, 0, 0, 0});
  auto pools3 = build_edge_pools(g3, {0});
  auto dang3 = dangerous_sets(st3, plan);
  auto res3 = adjust_small_sums(g3, st3, plan, ones(g3), pools3, dang3);
  auto* ok = std::get_if<SmallAdjust>(&res3);
  REQUIRE(ok);
  CHECK(ok->targets == std::vector<std::pair<int, std::int64_t>>{{0, 3}});
  CHECK(weighted_degrees(g3, ok->weighting).sums[0] == 3);

  // degree 4 strands the vertex between multiples
  Graph g4 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto st4 = state_from(g4, {1, 0, 0, 0, 0});
  auto res4 = adjust_small_sums(g4, st4, plan, ones(g4), build_edge_pools(g4, {0}),
                                dangerous_sets(st4, plan));
  auto* f = std::get_if<PhaseFailure>(&res4);
  REQUIRE(f);
  CHECK(f->phase == "adjust_small");
  CHECK(f->kind == "no_admissible_target");
  CHECK(f->vertex == 0);
}

TEST_CASE("small adjustment: rivals may not share a target") {
  auto plan = plan_intervals(8, 1, 3, {.t = 24000.0, .lambda = 3});

  // two class vertices with no class edges, hanging off big hubs
  auto pair_graph = [](int d0, int d1) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < d0; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < d1; ++i) edges.emplace_back(1, 2 + i);
    return make_graph(2 + std::max(d0, d1), std::move(edges));
  };

  Graph clash = pair_graph(6, 6);
  std::vector<std::uint8_t> small(clash.n, 0);
  small[0] = small[1] = 1;
  auto st = state_from(clash, small);
  auto res = adjust_small_sums(clash, st, plan, ones(clash), build_edge_pools(clash, {0, 1}),
                               dangerous_sets(st, plan));
  auto* f = std::get_if<PhaseFailure>(&res);
  REQUIRE(f);  // vertex 0 takes 6; vertex 1's one-point range has nothing left
  CHECK(f->kind == "no_admissible_target");
  CHECK(f->vertex == 1);

  Graph apart = pair_graph(6, 9);
  std::vector<std::uint8_t> small2(apart.n, 0);
  small2[0] = small2[1] = 1;
  auto st2 = state_from(apart, small2);
  auto res2 = adjust_small_sums(apart, st2, plan, ones(apart), build_edge_pools(apart, {0, 1}),
                                dangerous_sets(st2, plan));
  auto* ok = std::get_if<SmallAdjust>(&res2);
  REQUIRE(ok);
  CHECK(ok->targets == std::vector<std::pair<int, std::int64_t>>{{0, 6}, {1, 9}});
  CHECK(ok->order == std::vector<int>{0, 1});

  auto res3 = adjust_small_sums(apart, st2, plan, ones(apart), build_edge_pools(apart, {0, 1}),
                                dangerous_sets(st2, plan), SmallOrder::descending_id);
  auto* ok3 = std::get_if<SmallAdjust>(&res3);
  REQUIRE(ok3);
  CHECK(ok3->order == std::vector<int>{1, 0});
}

TEST_CASE("small adjustment rejects a tampered starting weighting") {
  auto plan = plan_intervals(100, 1, 3, {.t = 24000.0, .lambda = 3});
  Graph g = generate_complete(3);
  auto st = state_from(g, {1, 1, 1});
  auto w = ones(g);
  w.w[0] = 2;  // class edges must arrive at weight 1
  CHECK_THROWS_AS((void)adjust_small_sums(g, st, plan, w, build_edge_pools(g, {0, 1, 2}),
                                          dangerous_sets(st, plan)),
                  std::logic_error);
}

TEST_CASE("small adjustment drives sampled classes to clean targets") {
  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 400 && successes < 8; ++seed) {
    auto run = synth::run_phase3(seed);
    if (auto* out = std::get_if<SmallAdjust>(&run.result)) {
      ++successes;
      for (const auto& viol : synth::check_phase3(run, *out)) FAIL_CHECK(viol);
    }
  }
  CHECK(successes == 8);
}
