#include <cmath>
#include <stdexcept>

#include "irrs/check.hpp"
#include "irrs/dense.hpp"
#include "irrs/rng.hpp"

namespace irrs {

PartitionState sample_partition(const Graph& g, const IntervalPlan& plan, std::uint64_t seed,
                                const SampleOverrides& ov) {
  const double sqrt_t = std::sqrt(plan.t);
  PartitionState st;
  st.seed = seed;
  st.y_prob = ov.y_prob ? *ov.y_prob : 1.0 / sqrt_t;
  st.z_prob = ov.z_prob ? *ov.z_prob : (2.0 * plan.K - 1.0) / sqrt_t;
  if (st.y_prob < 0.0 || st.y_prob > 1.0)
    throw std::invalid_argument("small-class probability outside [0, 1]");
  if (st.z_prob < 0.0 || st.z_prob > 1.0)
    throw std::invalid_argument("reserved-edge probability " + std::to_string(st.z_prob) +
                                " outside [0, 1]; t is too small for this K");
  if (ov.x_const && (*ov.x_const < 0.0 || *ov.x_const > 1.0))
    throw std::invalid_argument("x override outside [0, 1]");

  Rng rng(seed);
  const int n = g.n;
  st.x.resize(n);
  if (ov.x_const)
    for (int v = 0; v < n; ++v) st.x[v] = *ov.x_const;
  else
    for (int v = 0; v < n; ++v) st.x[v] = rng.next_unit();

  st.in_small.resize(n);
  for (int v = 0; v < n; ++v) st.in_small[v] = rng.bernoulli(st.y_prob) ? 1 : 0;
  for (int v = 0; v < n; ++v)
    (st.in_small[v] ? st.small_vertices : st.big_vertices).push_back(v);

  st.reserved.assign(g.m(), 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (st.in_small[u] + st.in_small[v] == 1)
      st.reserved[e] = rng.bernoulli(st.z_prob) ? 1 : 0;
  }

  st.heavy.assign(g.m(), 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (st.x[u] + st.x[v] >= 1.0 && st.in_small[u] + st.in_small[v] <= 1 && !st.reserved[e])
      st.heavy[e] = 1;
  }

  st.small_degree.assign(n, 0);
  st.reserved_degree.assign(n, 0);
  std::vector<int> heavy_degree(n, 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (st.in_small[v]) ++st.small_degree[u];
    if (st.in_small[u]) ++st.small_degree[v];
    if (st.reserved[e]) {
      ++st.reserved_degree[u];
      ++st.reserved_degree[v];
    }
    if (st.heavy[e]) {
      ++heavy_degree[u];
      ++heavy_degree[v];
    }
  }

  st.init_sum.resize(n);
  st.proxy_sum.resize(n);
  const double t = plan.t;
  const int K = plan.K;
  for (int v = 0; v < n; ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    st.init_sum[v] = static_cast<std::int64_t>(K) * heavy_degree[v] + (d - heavy_degree[v]);
    const double y = st.in_small[v] ? 1.0 : 0.0;
    st.proxy_sum[v] =
        d + (K - 1.0) * st.x[v] * d *
                (1.0 - 2.0 * K * y / sqrt_t + (2.0 * K - 1.0) * (2.0 * y - 1.0) / t);
  }
  return st;
}

EdgeWeighting initial_weighting(const Graph& g, const PartitionState& st, int K) {
  EdgeWeighting w{std::vector<int>(g.m(), 1), std::max(K, 3)};
  for (int e = 0; e < g.m(); ++e)
    if (st.heavy[e]) w.w[e] = K;
  auto sums = weighted_degrees(g, w).sums;
  for (int v = 0; v < g.n; ++v)
    IRRS_CHECK(sums[v] == st.init_sum[v],
               "initial weighting disagrees with sampled sums at vertex " + std::to_string(v));
  return w;
}

namespace {

void update_worst(EventCheck& c, double margin, std::int64_t index) {
  if (margin < c.worst_margin) {
    c.worst_margin = margin;
    c.worst_index = index;
  }
  if (margin < 0.0) c.pass = false;
}

}  // namespace

EventReport check_events(const Graph& g, const PartitionState& st, const IntervalPlan& plan,
                         const EventSlacks& slacks) {
  EventReport rep;
  const double sqrt_t = std::sqrt(plan.t);
  const double nn = static_cast<double>(plan.n);
  const int K = plan.K;

  // per-vertex gap between the realized sum and its proxy
  for (int v = 0; v < g.n; ++v) {
    double rhs = slacks.proxy_gap * plan.margin;
    update_worst(rep.proxy_gap, rhs - std::abs(st.init_sum[v] - st.proxy_sum[v]), v);
  }

  // widened-interval loads of the two classes
  const std::int64_t jmax = plan.interval_count;
  std::vector<std::int64_t> big_load(static_cast<std::size_t>(jmax) + 2, 0);
  std::vector<std::int64_t> small_load(static_cast<std::size_t>(jmax) + 2, 0);
  auto deposit = [&](std::vector<std::int64_t>& load, double s) {
    // all j with boundary(j-1) - margin <= s < boundary(j) + margin
    const double w = plan.width();
    auto lo = static_cast<std::int64_t>(
        std::floor((s - plan.delta - plan.margin) / w));  // candidate j-1 low side
    for (std::int64_t j = std::max<std::int64_t>(1, lo - 1);
         j <= jmax; ++j) {
      if (s >= plan.boundary(j) + plan.margin) continue;
      if (s < plan.boundary(j - 1) - plan.margin) break;
      ++load[static_cast<std::size_t>(j)];
    }
  };
  for (int v : st.big_vertices) deposit(big_load, st.proxy_sum[v]);
  for (int v : st.small_vertices) deposit(small_load, st.proxy_sum[v]);
  const double big_rhs = slacks.big_interval * (1.0 - 17.0 * K * K / sqrt_t) * (nn / plan.t);
  const double small_rhs =
      slacks.small_interval * (1.0 - 1.0 / sqrt_t) * (nn / (plan.t * sqrt_t));
  for (std::int64_t j = 1; j <= jmax; ++j) {
    update_worst(rep.big_interval, big_rhs - static_cast<double>(big_load[j]), j);
    update_worst(rep.small_interval, small_rhs - static_cast<double>(small_load[j]), j);
  }

  // reserved-degree floor on big vertices (lower bound: margin = lhs - rhs)
  for (int v : st.big_vertices) {
    double rhs = slacks.big_reserved * 2.0 * nn / plan.t;
    update_worst(rep.big_reserved, st.reserved_degree[v] - rhs, v);
  }
  // reserved-degree ceiling and class-degree window on small vertices
  for (int v : st.small_vertices) {
    double rhs = slacks.small_reserved * 2.0 * K * g.degree(v) / sqrt_t;
    update_worst(rep.small_reserved, rhs - st.reserved_degree[v], v);
    double window = slacks.small_degree * std::sqrt(nn);
    update_worst(rep.small_degree,
                 window - std::abs(st.small_degree[v] - g.degree(v) / sqrt_t), v);
  }

  rep.pass = rep.proxy_gap.pass && rep.big_interval.pass && rep.small_interval.pass &&
             rep.big_reserved.pass && rep.small_reserved.pass && rep.small_degree.pass;
  return rep;
}

SampleSearch sample_until_good(const Graph& g, const IntervalPlan& plan,
                               std::uint64_t master_seed, int max_trials,
                               const EventSlacks& slacks, const SampleOverrides& ov) {
  SampleSearch out;
  for (int trial = 0; trial < max_trials; ++trial) {
    auto st = sample_partition(g, plan, derive_seed(master_seed, trial), ov);
    out.events = check_events(g, st, plan, slacks);
    out.stats.trials = trial + 1;
    if (out.events.pass) {
      out.state = std::move(st);
      out.accepted_trial = trial;
      return out;
    }
    auto fams = out.events.families();
    for (std::size_t f = 0; f < fams.size(); ++f)
      if (!fams[f]->pass) ++out.stats.family_failures[f];
  }
  return out;
}

}  // namespace irrs
