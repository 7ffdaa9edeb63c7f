#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "irrs/check.hpp"
#include "irrs/dense.hpp"

namespace irrs {

namespace {

// reserved edges incident to v, ascending edge index
std::vector<int> reserved_edges_of(const Graph& g, const PartitionState& st, int v) {
  std::vector<int> out;
  for (auto [u, e] : g.adj[v])
    if (st.reserved[e]) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::variant<BigAdjust, PhaseFailure> adjust_big_sums(const Graph& g, const PartitionState& st,
                                                      const IntervalPlan& plan,
                                                      const EdgeWeighting& omega0) {
  IRRS_CHECK(plan.lambda >= 3, "adjustment needs a modulus of at least 3");
  BigAdjust out;
  out.weighting = omega0;

  std::map<std::int64_t, std::vector<std::pair<std::int64_t, int>>> by_interval;
  for (int v : st.big_vertices) {
    const std::int64_t j = plan.interval_of(static_cast<double>(st.init_sum[v]));
    if (j < 1 || j >= plan.interval_count)  // the top interval has no successor
      return PhaseFailure{"adjust_big", "sum_outside_grid",
                          "initial sum " + std::to_string(st.init_sum[v]) +
                              " of vertex " + std::to_string(v) + " lies outside the grid",
                          v, j};
    by_interval[j].emplace_back(st.init_sum[v], v);
  }

  std::unordered_set<std::int64_t> taken;
  for (auto it = by_interval.rbegin(); it != by_interval.rend(); ++it) {
    const std::int64_t j = it->first;
    auto& group = it->second;
    std::sort(group.begin(), group.end());
    for (auto [sum, v] : group) {
      // smallest value of interval j+1 above the current sum, off the
      // forbidden residues and not yet taken
      auto s = static_cast<std::int64_t>(std::ceil(plan.boundary(j)));
      while (static_cast<double>(s - 1) >= plan.boundary(j)) --s;
      while (static_cast<double>(s) < plan.boundary(j)) ++s;
      if (s <= sum) s = sum + 1;
      while (true) {
        if (static_cast<double>(s) >= plan.boundary(j + 1))
          return PhaseFailure{"adjust_big", "interval_overflow",
                              "no admissible target in interval " + std::to_string(j + 1) +
                                  " for vertex " + std::to_string(v),
                              v, j + 1};
        if (s % plan.lambda >= 2 && !taken.count(s)) break;
        ++s;
      }
      const std::int64_t raise = s - sum;
      const auto pool = reserved_edges_of(g, st, v);
      if (raise > static_cast<std::int64_t>(pool.size()))
        return PhaseFailure{"adjust_big", "insufficient_reserved",
                            "vertex " + std::to_string(v) + " needs " + std::to_string(raise) +
                                " raises but has " + std::to_string(pool.size()) +
                                " reserved edges",
                            v, j + 1};
      for (std::int64_t i = 0; i < raise; ++i) {
        const int e = pool[static_cast<std::size_t>(i)];
        IRRS_CHECK(out.weighting.w[e] == 1, "reserved edge raised twice");
        out.weighting.w[e] = 2;
      }
      taken.insert(s);
      out.assigned.emplace_back(v, s);
      out.raised.emplace_back(v, static_cast<int>(raise));
    }
  }
  return out;
}

EdgePools build_edge_pools(const Graph& g, const std::vector<int>& small_vertices) {
  EdgePools out;
  out.sub = induced_subgraph(g, small_vertices);
  const Graph& s = out.sub.graph;
  const int aux = s.n;

  // augmented adjacency: the induced edges first, then one edge to the
  // auxiliary vertex for every odd-degree vertex
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(s.n) + 1);
  for (int v = 0; v < s.n; ++v) adj[v] = s.adj[v];
  int next_edge = s.m();
  for (int v = 0; v < s.n; ++v)
    if (s.degree(v) % 2 == 1) {
      adj[v].emplace_back(aux, next_edge);
      adj[aux].emplace_back(v, next_edge);
      ++next_edge;
    }

  out.pool.assign(s.n, {});
  std::vector<std::uint8_t> used(next_edge, 0);
  std::vector<std::size_t> ptr(static_cast<std::size_t>(s.n) + 1, 0);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(s.n) + 1, 0);

  for (int start = 0; start < s.n; ++start) {
    if (seen[start] || adj[start].empty()) continue;
    // iterative Euler circuit; the reversed pop order is the tour
    std::vector<std::pair<int, int>> stack{{start, -1}}, tour;
    while (!stack.empty()) {
      const int v = stack.back().first;
      seen[v] = 1;
      bool advanced = false;
      while (ptr[v] < adj[v].size()) {
        auto [u, e] = adj[v][ptr[v]];
        ++ptr[v];
        if (used[e]) continue;
        used[e] = 1;
        stack.emplace_back(u, e);
        advanced = true;
        break;
      }
      if (!advanced) {
        tour.push_back(stack.back());
        stack.pop_back();
      }
    }
    std::reverse(tour.begin(), tour.end());
    for (std::size_t i = 1; i < tour.size(); ++i) {
      const int e = tour[i].second;
      if (e < s.m())  // real edge; tail keeps it
        out.pool[tour[i - 1].first].push_back(out.sub.edge_to_parent[e]);
    }
  }

  for (int v = 0; v < s.n; ++v)
    IRRS_CHECK(static_cast<int>(out.pool[v].size()) >= s.degree(v) / 2 - 1,
               "edge pool fell below half the class degree");
  return out;
}

std::vector<std::vector<int>> dangerous_sets(const PartitionState& st, const IntervalPlan& plan) {
  const double radius = (2.0 * plan.K + 2.0) * plan.n / std::sqrt(plan.t) +
                        2.0 * std::sqrt(static_cast<double>(plan.n));
  const auto k = static_cast<int>(st.small_vertices.size());
  std::vector<int> order(st.small_vertices);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(st.init_sum[a], a) < std::make_pair(st.init_sum[b], b);
  });
  std::vector<int> index_of_parent;  // parent id -> slot in small_vertices
  if (k > 0) {
    index_of_parent.assign(static_cast<std::size_t>(st.small_vertices.back()) + 1, -1);
    for (int i = 0; i < k; ++i) index_of_parent[st.small_vertices[i]] = i;
  }

  std::vector<std::vector<int>> out(k);
  int lo = 0;
  for (int i = 0; i < k; ++i) {
    while (st.init_sum[order[i]] - st.init_sum[order[lo]] >= radius) ++lo;
    for (int j = lo; j < k && st.init_sum[order[j]] - st.init_sum[order[i]] < radius; ++j) {
      if (j == i) continue;
      out[index_of_parent[order[i]]].push_back(order[j]);
    }
  }
  for (auto& set : out) std::sort(set.begin(), set.end());
  return out;
}

std::variant<SmallAdjust, PhaseFailure> adjust_small_sums(
    const Graph& g, const PartitionState& st, const IntervalPlan& plan,
    const EdgeWeighting& omega1, const EdgePools& pools,
    const std::vector<std::vector<int>>& dangerous, SmallOrder order) {
  IRRS_CHECK(plan.lambda >= 3, "adjustment needs a modulus of at least 3");
  IRRS_CHECK(dangerous.size() == st.small_vertices.size(),
             "rival sets not indexed like the small class");
  SmallAdjust out;
  out.weighting = omega1;
  auto& w = out.weighting;

  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (st.in_small[u] && st.in_small[v]) {
      IRRS_CHECK(w.w[e] == 1, "class-internal edge not at unit weight");
      w.w[e] = 2;
    }
  }

  auto sums = weighted_degrees(g, w).sums;
  std::vector<int> slot(g.n, -1);  // parent id -> index in small_vertices / pools.sub
  for (std::size_t i = 0; i < st.small_vertices.size(); ++i)
    slot[st.small_vertices[i]] = static_cast<int>(i);
  IRRS_CHECK(pools.sub.vertex_to_parent == st.small_vertices,
             "pools built over a different vertex class");

  std::vector<std::uint8_t> processed(g.n, 0);
  std::vector<std::int64_t> target(g.n, 0);

  std::vector<int> schedule(st.small_vertices);
  if (order == SmallOrder::descending_id) std::reverse(schedule.begin(), schedule.end());

  const std::int64_t lambda = plan.lambda;
  for (int v : schedule) {
    std::vector<int> pool = pools.pool[slot[v]];
    std::sort(pool.begin(), pool.end());
    std::int64_t lo = sums[v], hi = sums[v];
    std::vector<std::int8_t> dmin(pool.size()), dmax(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto [a, b] = g.edges[pool[i]];
      const int u = a == v ? b : a;
      IRRS_CHECK(st.in_small[u] == 1, "pool edge leaves the class");
      if (!processed[u]) {
        dmin[i] = -1;
        dmax[i] = 1;
      } else if (sums[u] == target[u]) {
        dmin[i] = 0;
        dmax[i] = 1;
      } else {
        IRRS_CHECK(sums[u] == target[u] + 1, "settled vertex drifted outside its window");
        dmin[i] = -1;
        dmax[i] = 0;
      }
      lo += dmin[i];
      hi += dmax[i];
    }

    std::int64_t chosen = -1;
    for (std::int64_t s = (lo + lambda - 1) / lambda * lambda; s <= hi; s += lambda) {
      bool clash = false;
      for (int r : dangerous[slot[v]])
        if (processed[r] && target[r] == s) {
          clash = true;
          break;
        }
      if (!clash) {
        chosen = s;
        break;
      }
    }
    if (chosen < 0)
      return PhaseFailure{"adjust_small", "no_admissible_target",
                          "no free multiple of " + std::to_string(lambda) + " in [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "] for vertex " +
                              std::to_string(v),
                          v, -1};

    std::int64_t need = chosen - sums[v];
    const std::int8_t step = need > 0 ? 1 : -1;
    for (std::size_t i = 0; i < pool.size() && need != 0; ++i) {
      if ((step > 0 ? dmax[i] : dmin[i]) != step) continue;
      const int e = pool[i];
      w.w[e] += step;
      IRRS_CHECK(w.w[e] >= 1 && w.w[e] <= 3, "class-internal weight left {1,2,3}");
      auto [a, b] = g.edges[e];
      sums[a] += step;
      sums[b] += step;
      need -= step;
    }
    IRRS_CHECK(need == 0, "target not reachable with the pool's tweaks");
    processed[v] = 1;
    target[v] = chosen;
    out.order.push_back(v);
    out.targets.emplace_back(v, chosen);
    for (int u : out.order)
      IRRS_CHECK(sums[u] == target[u] || sums[u] == target[u] + 1,
                 "settled vertex drifted outside its window");
  }
  return out;
}

}  // namespace irrs
