#include "irrs/exact.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "irrs/rng.hpp"

namespace irrs {
namespace {

std::vector<int> bfs_positions(const Graph& g) {
  std::vector<int> pos(g.n, -1);
  int next = 0;
  std::queue<int> q;
  for (int root = 0; root < g.n; ++root) {
    if (pos[root] >= 0) continue;
    pos[root] = next++;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [u, e] : g.adj[v])
        if (pos[u] < 0) {
          pos[u] = next++;
          q.push(u);
        }
    }
  }
  return pos;
}

// Edge visit order: earliest possible vertex completions under a BFS ranking.
std::vector<int> search_edge_order(const Graph& g) {
  auto pos = bfs_positions(g);
  std::vector<int> order(g.m());
  for (int e = 0; e < g.m(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto key = [&](int e) {
      auto [u, v] = g.edges[e];
      int hi = std::max(pos[u], pos[v]), lo = std::min(pos[u], pos[v]);
      return std::tuple<int, int, int>(hi, lo, e);
    };
    return key(a) < key(b);
  });
  return order;
}

}  // namespace

SearchResult find_weighting(const Graph& g, int k, std::uint64_t node_budget) {
  if (k < 1) throw std::invalid_argument("cap k must be at least 1");
  if (!check_goodness(g).good)
    throw std::invalid_argument("graph admits no irregular weighting for any cap");

  SearchResult res;
  const int m = g.m();
  if (m == 0) {  // a good edgeless graph has at most one vertex
    res.outcome = SearchOutcome::found;
    res.witness = EdgeWeighting{{}, k};
    return res;
  }

  const auto order = search_edge_order(g);
  // finish_depth[v]: index in `order` of v's last incident edge.
  std::vector<int> order_pos(m);
  for (int d = 0; d < m; ++d) order_pos[order[d]] = d;
  std::vector<std::vector<int>> completes_at(m);
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) == 0) continue;  // the lone isolated vertex never collides: sums here are >= 1
    int last = -1;
    for (auto [u, e] : g.adj[v]) last = std::max(last, order_pos[e]);
    completes_at[last].push_back(v);
  }

  std::vector<std::int64_t> sums(g.n, 0);
  std::vector<char> used(static_cast<std::size_t>(k) * g.max_degree() + 1, 0);
  std::vector<int> cur(m, 0);

  auto place = [&](int d, int x) -> bool {
    auto [u, v] = g.edges[order[d]];
    sums[u] += x;
    sums[v] += x;
    const auto& done = completes_at[d];
    for (std::size_t i = 0; i < done.size(); ++i) {
      if (used[sums[done[i]]]) {
        for (std::size_t j = 0; j < i; ++j) used[sums[done[j]]] = 0;
        sums[u] -= x;
        sums[v] -= x;
        return false;
      }
      used[sums[done[i]]] = 1;
    }
    return true;
  };
  auto unplace = [&](int d) {
    auto [u, v] = g.edges[order[d]];
    for (int c : completes_at[d]) used[sums[c]] = 0;
    sums[u] -= cur[d];
    sums[v] -= cur[d];
  };

  int d = 0;
  while (true) {
    bool placed = false;
    for (int x = cur[d] + 1; x <= k; ++x) {
      if (res.nodes == node_budget) {
        res.outcome = SearchOutcome::budget_exhausted;
        return res;
      }
      ++res.nodes;
      if (place(d, x)) {
        cur[d] = x;
        placed = true;
        break;
      }
    }
    if (!placed) {
      cur[d] = 0;
      if (d == 0) {
        res.outcome = SearchOutcome::none;
        return res;
      }
      --d;
      unplace(d);
      continue;
    }
    if (d + 1 == m) {
      EdgeWeighting w{std::vector<int>(m), k};
      for (int i = 0; i < m; ++i) w.w[order[i]] = cur[i];
      res.outcome = SearchOutcome::found;
      res.witness = std::move(w);
      return res;
    }
    ++d;
  }
}

ExactResult exact_strength(const Graph& g, int k_max, std::uint64_t node_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  ExactResult res;
  const auto done = [&]() -> ExactResult& {
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
  };
  if (!check_goodness(g).good) {
    res.outcome = ExactResult::Outcome::infinite;
    return done();
  }
  if (g.m() == 0) {  // single vertex
    res.outcome = ExactResult::Outcome::determined;
    res.strength = 1;
    res.witness = EdgeWeighting{{}, 1};
    res.stopped_at_k = 1;
    return done();
  }
  if (k_max <= 0) k_max = g.n;
  int k = 1;
  if (g.is_regular()) k = lower_bound_regular(g.n, g.min_degree());
  for (; k <= k_max; ++k) {
    res.stopped_at_k = k;
    auto sr = find_weighting(g, k, node_budget - res.nodes);
    res.nodes += sr.nodes;
    if (sr.outcome == SearchOutcome::budget_exhausted) {
      res.outcome = ExactResult::Outcome::budget_exhausted;
      return done();
    }
    if (sr.outcome == SearchOutcome::found) {
      res.outcome = ExactResult::Outcome::determined;
      res.strength = k;
      res.witness = std::move(sr.witness);
      return done();
    }
  }
  res.outcome = ExactResult::Outcome::none_up_to_kmax;
  return done();
}

GreedyResult random_greedy(const Graph& g, int k, std::uint64_t seed, int restarts) {
  if (k < 1) throw std::invalid_argument("cap k must be at least 1");
  if (!check_goodness(g).good)
    throw std::invalid_argument("graph admits no irregular weighting for any cap");
  GreedyResult res;
  const int m = g.m();
  if (m == 0) {
    res.found = true;
    res.witness = EdgeWeighting{{}, k};
    return res;
  }

  for (int r = 0; r < restarts; ++r) {
    res.restarts_used = r + 1;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    EdgeWeighting w{std::vector<int>(m), k};
    for (int e = 0; e < m; ++e) w.w[e] = 1 + static_cast<int>(rng.below(k));

    std::vector<std::int64_t> sums = weighted_degrees(g, w).sums;
    std::unordered_map<std::int64_t, int> mult;
    int distinct = 0;
    auto add = [&](std::int64_t s) {
      if (mult[s]++ == 0) ++distinct;
    };
    auto remove = [&](std::int64_t s) {
      if (--mult[s] == 0) --distinct;
    };
    for (auto s : sums) add(s);

    const int move_limit = k > 1 ? 60 * m + 200 : 0;  // with k = 1 there is nothing to change
    for (int step = 0; step < move_limit && distinct < g.n; ++step) {
      std::vector<int> colliding;
      for (int v = 0; v < g.n; ++v)
        if (mult[sums[v]] > 1) colliding.push_back(v);
      int v = colliding[rng.below(colliding.size())];
      auto [u, e] = g.adj[v][rng.below(g.adj[v].size())];
      int old_w = w.w[e];
      int new_w = 1 + static_cast<int>(rng.below(k - 1));
      if (new_w >= old_w) ++new_w;  // uniform over [1,k] minus the current value

      int a = g.edges[e].first, b = g.edges[e].second;
      int before = g.n - distinct;
      remove(sums[a]);
      remove(sums[b]);
      sums[a] += new_w - old_w;
      sums[b] += new_w - old_w;
      add(sums[a]);
      add(sums[b]);
      w.w[e] = new_w;
      if (g.n - distinct > before) {  // strictly worse: revert
        remove(sums[a]);
        remove(sums[b]);
        sums[a] -= new_w - old_w;
        sums[b] -= new_w - old_w;
        add(sums[a]);
        add(sums[b]);
        w.w[e] = old_w;
      }
    }
    if (distinct == g.n && is_irregular(g, w)) {
      res.found = true;
      res.witness = std::move(w);
      return res;
    }
  }
  return res;
}

}  // namespace irrs
