#include <chrono>
#include <cmath>
#include <stdexcept>

#include "irrs/check.hpp"
#include "irrs/dense.hpp"

namespace irrs {

namespace {

// final contract: distinct sums, weights drawn from {1, 2, 3, K}, big sums
// off the residues {0, 1} mod lambda, small sums on them
std::optional<PhaseFailure> verify_final(const Graph& g, const PartitionState& st,
                                         const IntervalPlan& plan, const EdgeWeighting& w) {
  for (int e = 0; e < g.m(); ++e)
    if (w.w[e] != 1 && w.w[e] != 2 && w.w[e] != 3 && w.w[e] != plan.K)
      return PhaseFailure{"verify", "alphabet",
                          "edge " + std::to_string(e) + " carries weight " +
                              std::to_string(w.w[e]),
                          -1, -1};
  const auto sums = weighted_degrees(g, w).sums;
  if (auto col = first_collision(g, w))
    return PhaseFailure{"verify", "collision",
                        "vertices " + std::to_string(col->a) + " and " + std::to_string(col->b) +
                            " share the sum " + std::to_string(col->sum),
                        col->a, -1};
  for (int v = 0; v < g.n; ++v) {
    const std::int64_t r = sums[v] % plan.lambda;
    if (st.in_small[v] && r >= 2)
      return PhaseFailure{"verify", "small_residue",
                          "vertex " + std::to_string(v) + " ended at " + std::to_string(sums[v]),
                          v, -1};
    if (!st.in_small[v] && r < 2)
      return PhaseFailure{"verify", "big_residue",
                          "vertex " + std::to_string(v) + " ended at " + std::to_string(sums[v]),
                          v, -1};
  }
  return std::nullopt;
}

}  // namespace

SolveReport run_pipeline(const Graph& g, int K, std::uint64_t seed, const DenseConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.seed = seed;
  rep.K = K;
  rep.config = cfg;
  auto finish = [&](SolveReport::Outcome oc) -> SolveReport& {
    rep.outcome = oc;
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
  };

  if (!check_goodness(g).good) {
    rep.failure = {"plan", "graph_outside_regime",
                   "no weighting can separate this graph at any cap", -1, -1};
    return finish(SolveReport::Outcome::not_applicable);
  }
  try {
    rep.plan = plan_intervals(g.n, g.min_degree(), K, cfg.plan);
  } catch (const std::invalid_argument& e) {
    rep.failure = {"plan", "invalid_parameters", e.what(), -1, -1};
    return finish(SolveReport::Outcome::phase_failure);
  }
  if (!rep.plan.lambda_ok) {
    rep.failure = {"plan", "lambda_too_small",
                   "modulus " + std::to_string(rep.plan.lambda) +
                       " leaves no admissible residues; raise t or override lambda",
                   -1, -1};
    return finish(SolveReport::Outcome::phase_failure);
  }

  SampleSearch search;
  try {
    search = sample_until_good(g, rep.plan, seed, cfg.max_trials, cfg.slacks, cfg.sample);
  } catch (const std::invalid_argument& e) {
    rep.failure = {"sample", "invalid_parameters", e.what(), -1, -1};
    return finish(SolveReport::Outcome::phase_failure);
  }
  rep.trials = search.stats;
  rep.accepted_trial = search.accepted_trial;
  rep.events = search.events;
  if (!search.state) {
    std::string worst;
    auto fams = search.events.families();
    for (std::size_t f = 0; f < fams.size(); ++f)
      if (!fams[f]->pass) worst += std::string(worst.empty() ? "" : ", ") + kEventNames[f];
    rep.failure = {"sample", "trial_budget_exhausted",
                   std::to_string(search.stats.trials) + " trials rejected; last failed: " + worst,
                   -1, -1};
    return finish(SolveReport::Outcome::phase_failure);
  }
  const PartitionState& st = *search.state;

  const EdgeWeighting omega0 = initial_weighting(g, st, K);
  auto big = adjust_big_sums(g, st, rep.plan, omega0);
  if (auto* fail = std::get_if<PhaseFailure>(&big)) {
    rep.failure = *fail;
    return finish(SolveReport::Outcome::phase_failure);
  }
  auto& ba = std::get<BigAdjust>(big);
  rep.big_assigned = ba.assigned;
  rep.big_raised = ba.raised;

  const EdgePools pools = build_edge_pools(g, st.small_vertices);
  const auto dangerous = dangerous_sets(st, rep.plan);
  auto small = adjust_small_sums(g, st, rep.plan, ba.weighting, pools, dangerous, cfg.order);
  if (auto* fail = std::get_if<PhaseFailure>(&small)) {
    rep.failure = *fail;
    return finish(SolveReport::Outcome::phase_failure);
  }
  auto& sa = std::get<SmallAdjust>(small);
  rep.small_order = sa.order;
  rep.small_targets = sa.targets;

  if (auto fail = verify_final(g, st, rep.plan, sa.weighting)) {
    rep.failure = *fail;
    return finish(SolveReport::Outcome::phase_failure);
  }
  rep.weighting = std::move(sa.weighting);
  rep.verified = true;
  return finish(SolveReport::Outcome::success);
}

}  // namespace irrs
