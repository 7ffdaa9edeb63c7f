#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "irrs/graph.hpp"
#include "irrs/weighting.hpp"

namespace irrs {

// ---------------------------------------------------------------------------
// Interval plan
// ---------------------------------------------------------------------------

struct PlanOverrides {
  std::optional<double> t;    // must be > 1
  std::optional<int> lambda;  // must be >= 3 when supplied
};

// Grid of half-open intervals I_j = [boundary(j-1), boundary(j)), j = 1..count,
// used to spread the big-class sums, plus the parameters the randomized
// pipeline derives from it.
struct IntervalPlan {
  int K = 3;
  std::int64_t n = 0;
  std::int64_t delta = 0;  // grid origin; the graph's min degree in the pipeline
  double t = 1.0;          // resolution parameter; formula value is (n / ln n)^(1/3)
  int lambda = 0;          // congruence modulus for final sums; formula floor(sqrt(t)/(8K^2))
  double margin = 0.0;     // interval widening for load counting: 3K n / (t sqrt t)
  std::int64_t interval_count = 0;  // ceil(K * t)
  bool t_from_formula = true;
  bool lambda_from_formula = true;
  double delta_threshold_value = 0.0;  // min-degree threshold at (K, n)
  bool delta_ok = false;               // delta >= threshold (the guarantee's regime)
  bool lambda_ok = false;              // lambda >= 3 (phases 2-3 need it)

  double width() const { return static_cast<double>(n) / t; }
  double boundary(std::int64_t j) const { return static_cast<double>(delta) + j * width(); }
  // 1-based interval index holding `value`; 0 if below the grid,
  // interval_count + 1 if at or beyond the top boundary.
  std::int64_t interval_of(double value) const;
};

// Throws on K < 3, n < 3, delta < 1, override t <= 1, or override lambda < 3.
IntervalPlan plan_intervals(std::int64_t n, std::int64_t delta, int K,
                            const PlanOverrides& ov = {});

// ---------------------------------------------------------------------------
// Random partition state
// ---------------------------------------------------------------------------

// Test knobs that replace the sampling distributions; defaults draw
// x ~ U[0,1), small-class membership with prob 1/sqrt(t), and reserved-edge
// marks with prob (2K-1)/sqrt(t).
struct SampleOverrides {
  std::optional<double> x_const;
  std::optional<double> y_prob;
  std::optional<double> z_prob;
};

struct PartitionState {
  std::uint64_t seed = 0;
  double y_prob = 0.0, z_prob = 0.0;    // resolved probabilities
  std::vector<double> x;                // per-vertex uniform mark
  std::vector<std::uint8_t> in_small;   // 1 = small class, 0 = big class
  std::vector<std::uint8_t> reserved;   // per edge: big-small edges kept at weight 1/2 for phase 2
  std::vector<std::uint8_t> heavy;      // per edge: initially weighted K instead of 1
  std::vector<int> big_vertices;        // ascending
  std::vector<int> small_vertices;      // ascending
  std::vector<int> small_degree;        // neighbors in the small class
  std::vector<int> reserved_degree;     // incident reserved edges
  std::vector<std::int64_t> init_sum;   // weighted degree under the initial weighting
  std::vector<double> proxy_sum;        // concentration proxy the events compare against
};

// Draw order (fixed for reproducibility): x for v = 0..n-1, then class marks
// for v = 0..n-1, then reserved marks over eligible edges (exactly one small
// endpoint) in edge-index order. Overridden streams are not drawn at all.
// Throws if the resolved reserved-edge probability exceeds 1.
PartitionState sample_partition(const Graph& g, const IntervalPlan& plan, std::uint64_t seed,
                                const SampleOverrides& ov = {});

// Initial weighting: K on heavy edges, 1 elsewhere. Checks that the state's
// recorded sums match.
EdgeWeighting initial_weighting(const Graph& g, const PartitionState& st, int K);

// ---------------------------------------------------------------------------
// Concentration events
// ---------------------------------------------------------------------------

// Multipliers scale each event's right-hand side; 1.0 keeps the exact bound.
// For the one lower-bound event (big_reserved) a multiplier below 1 relaxes.
struct EventSlacks {
  double proxy_gap = 1.0;       // |init_sum - proxy| <= 3K n / (t sqrt t)
  double big_interval = 1.0;    // widened-interval big-class load <= (1 - 17K^2/sqrt t) n/t
  double small_interval = 1.0;  // widened-interval small-class load <= (1 - 1/sqrt t) n/(t sqrt t)
  double big_reserved = 1.0;    // big vertices: reserved degree >= 2n/t
  double small_reserved = 1.0;  // small vertices: reserved degree <= 2K d(v)/sqrt t
  double small_degree = 1.0;    // small vertices: |d_small(v) - d(v)/sqrt t| <= sqrt n
};

struct EventCheck {
  bool pass = true;
  // min over instances of (rhs - lhs), or (lhs - rhs) for the lower-bound
  // event; negative means the event failed.
  double worst_margin = std::numeric_limits<double>::infinity();
  std::int64_t worst_index = -1;  // vertex id or interval j realizing the worst margin
};

struct EventReport {
  EventCheck proxy_gap, big_interval, small_interval, big_reserved, small_reserved, small_degree;
  bool pass = false;

  std::array<const EventCheck*, 6> families() const {
    return {&proxy_gap, &big_interval, &small_interval, &big_reserved, &small_reserved,
            &small_degree};
  }
};

inline constexpr std::array<const char*, 6> kEventNames = {
    "proxy_gap", "big_interval", "small_interval", "big_reserved", "small_reserved",
    "small_degree"};

EventReport check_events(const Graph& g, const PartitionState& st, const IntervalPlan& plan,
                         const EventSlacks& slacks = {});

// ---------------------------------------------------------------------------
// Rejection sampling
// ---------------------------------------------------------------------------

struct TrialStats {
  int trials = 0;
  std::array<std::int64_t, 6> family_failures{};  // indexed like kEventNames
};

struct SampleSearch {
  std::optional<PartitionState> state;  // first accepted sample, if any
  EventReport events;                   // report of the accepted (or last) trial
  TrialStats stats;
  int accepted_trial = -1;  // 0-based; -1 when the budget ran out
};

// Trial i draws with seed derive_seed(master_seed, i), i = 0..max_trials-1,
// and accepts the first state passing check_events.
SampleSearch sample_until_good(const Graph& g, const IntervalPlan& plan,
                               std::uint64_t master_seed, int max_trials,
                               const EventSlacks& slacks, const SampleOverrides& ov = {});

// ---------------------------------------------------------------------------
// Adjustment phases
// ---------------------------------------------------------------------------

struct PhaseFailure {
  std::string phase;  // "plan" | "sample" | "adjust_big" | "pools" | "adjust_small" | "verify"
  std::string kind;
  std::string detail;
  std::int64_t vertex = -1;
  std::int64_t interval = -1;
};

struct BigAdjust {
  EdgeWeighting weighting;                             // after all raises
  std::vector<std::pair<int, std::int64_t>> assigned;  // big vertex -> new sum
  std::vector<std::pair<int, int>> raised;             // big vertex -> raised edge count
};

// Phase 2: walks the grid top interval down; every big vertex whose sum lies
// in interval j moves to the smallest value of interval j+1 that is above its
// current sum, avoids residues {0, 1} mod lambda, and is not already taken,
// by raising that many of its reserved edges from 1 to 2 (ascending edge
// index). Vertices inside an interval go in (sum, id) order.
std::variant<BigAdjust, PhaseFailure> adjust_big_sums(const Graph& g, const PartitionState& st,
                                                      const IntervalPlan& plan,
                                                      const EdgeWeighting& omega0);

struct EdgePools {
  InducedSubgraph sub;                 // induced on the small class
  std::vector<std::vector<int>> pool;  // per small vertex (subgraph id): parent edge indices
};

// Splits the small-class subgraph's edges into per-vertex pools via an
// Eulerian orientation: odd-degree vertices get joined to one auxiliary
// vertex, each component is traversed from its lowest-id vertex, and every
// real edge lands in the pool of its tail. Guarantees
// |pool(v)| >= floor(d_small(v)/2) - 1.
EdgePools build_edge_pools(const Graph& g, const std::vector<int>& small_vertices);

// Small vertices whose initial sums sit within (2K+2) n / sqrt(t) + 2 sqrt(n)
// of each other can still collide after the adjustments; each vertex gets the
// list of those rivals. Indexed like small_vertices; entries are parent ids.
std::vector<std::vector<int>> dangerous_sets(const PartitionState& st, const IntervalPlan& plan);

enum class SmallOrder { ascending_id, descending_id };

struct SmallAdjust {
  EdgeWeighting weighting;                            // after all pool tweaks
  std::vector<int> order;                             // processing order (parent ids)
  std::vector<std::pair<int, std::int64_t>> targets;  // small vertex -> chosen target
};

// Phase 3: raises every small-small edge to 2, then processes small vertices
// in the configured order; each picks the smallest reachable multiple of
// lambda not taken by a processed rival and realizes it with +/-1 tweaks on
// its own pool (+1s first, then -1s, ascending edge index). Tweaks on edges
// into processed vertices are restricted so their sums stay within
// {target, target + 1}.
std::variant<SmallAdjust, PhaseFailure> adjust_small_sums(
    const Graph& g, const PartitionState& st, const IntervalPlan& plan,
    const EdgeWeighting& omega1, const EdgePools& pools,
    const std::vector<std::vector<int>>& dangerous, SmallOrder order = SmallOrder::ascending_id);

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

struct DenseConfig {
  PlanOverrides plan;
  SampleOverrides sample;
  EventSlacks slacks;
  int max_trials = 64;
  SmallOrder order = SmallOrder::ascending_id;
};

struct SolveReport {
  enum class Outcome { success, phase_failure, not_applicable };
  Outcome outcome = Outcome::not_applicable;
  PhaseFailure failure;  // meaningful unless outcome == success
  std::uint64_t seed = 0;
  int K = 0;
  DenseConfig config;  // fully resolved, so a report alone reproduces the run
  IntervalPlan plan;
  TrialStats trials;
  int accepted_trial = -1;
  EventReport events;
  std::optional<EdgeWeighting> weighting;  // final weighting on success
  bool verified = false;
  std::vector<std::pair<int, std::int64_t>> big_assigned;
  std::vector<std::pair<int, int>> big_raised;
  std::vector<int> small_order;
  std::vector<std::pair<int, std::int64_t>> small_targets;
  double wall_ms = 0.0;  // timing only; excluded from reproducibility comparisons
};

// plan -> rejection sampling -> initial weighting -> big adjustment -> pools
// -> small adjustment -> full verification. Never reports success without the
// final weighting passing verification; failures carry the phase and witness.
SolveReport run_pipeline(const Graph& g, int K, std::uint64_t seed, const DenseConfig& cfg = {});

// ---------------------------------------------------------------------------
// Tail-bound diagnostics
// ---------------------------------------------------------------------------

// (upper, lower) tail bounds exp(-dev^2/(3np)) and exp(-dev^2/(2np)) for a
// Binomial(n, p) deviating by dev from its mean; needs 0 <= dev <= np and
// 0 < p < 1.
std::pair<double, double> chernoff_one_sided(std::int64_t n, double p, double dev);

// Two-sided bound min(1, 2 exp(-dev^2 / (3 max(np, dev)))), dev >= 0.
double chernoff_two_sided(std::int64_t n, double p, double dev);

// Aggregate failure probability (4 + 2 K t) / n the event union costs at the
// plan's parameters; meaningful for formula-mode plans.
double union_bound_diagnostic(std::int64_t n, int K, const IntervalPlan& plan);

}  // namespace irrs
