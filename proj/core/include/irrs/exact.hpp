#pragma once

#include <cstdint>
#include <optional>

#include "irrs/graph.hpp"
#include "irrs/weighting.hpp"

namespace irrs {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

enum class SearchOutcome { found, none, budget_exhausted };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<EdgeWeighting> witness;
  std::uint64_t nodes = 0;  // weight assignments tried
};

// Complete depth-first search for an irregular weighting with cap k.
// Edges are ordered so vertices finish early (sorted by the BFS positions of
// their endpoints); a branch dies as soon as two finished vertices share a
// sum. Weights are tried ascending, no symmetry breaking. Deterministic.
// Throws std::invalid_argument if the graph admits no finite strength.
SearchResult find_weighting(const Graph& g, int k,
                            std::uint64_t node_budget = kDefaultNodeBudget);

struct ExactResult {
  enum class Outcome { determined, infinite, none_up_to_kmax, budget_exhausted };
  Outcome outcome = Outcome::none_up_to_kmax;
  int strength = 0;  // set when determined
  std::optional<EdgeWeighting> witness;
  std::uint64_t nodes = 0;  // total over all caps tried
  int stopped_at_k = 0;     // last cap examined
  double elapsed_ms = 0.0;  // timing only; excluded from reproducibility comparisons
};

// Scans caps upward (from the counting lower bound when the graph is regular,
// from 1 otherwise) until a witness exists. node_budget is shared across the
// whole scan. k_max <= 0 means n.
ExactResult exact_strength(const Graph& g, int k_max = 0,
                           std::uint64_t node_budget = kDefaultNodeBudget);

struct GreedyResult {
  bool found = false;
  std::optional<EdgeWeighting> witness;
  int restarts_used = 0;
};

// Randomized repair heuristic: random start, then hill-climbing on the number
// of duplicated sums with sideways moves, restarting on stall. Any returned
// witness is re-verified, so a positive answer is always sound. Deterministic
// for fixed (graph, k, seed, restarts): restart r uses derive_seed(seed, r).
GreedyResult random_greedy(const Graph& g, int k, std::uint64_t seed, int restarts);

}  // namespace irrs
