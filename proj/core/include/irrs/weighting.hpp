#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irrs/graph.hpp"

namespace irrs {

// Edge weights indexed like Graph::edges; cap k means weights live in [1, k].
struct EdgeWeighting {
  std::vector<int> w;
  int k = 1;
};

struct WeightedDegrees {
  std::vector<std::int64_t> sums;
};

// Throws std::invalid_argument if w.size() != g.m().
WeightedDegrees weighted_degrees(const Graph& g, const EdgeWeighting& w);

// True iff all weighted degrees are pairwise distinct.
bool is_irregular(const Graph& g, const EdgeWeighting& w);

// First offending edge index if some weight is outside [1, w.k].
std::optional<int> find_cap_violation(const EdgeWeighting& w);

// Smallest sum shared by two vertices, as (vertex a, vertex b, sum); a < b.
struct Collision {
  int a = -1, b = -1;
  std::int64_t sum = 0;
};
std::optional<Collision> first_collision(const Graph& g, const EdgeWeighting& w);

// Counting lower bound ceil((n + d - 1) / d) for d-regular graphs, 1 <= d < n.
int lower_bound_regular(int n, int d);

// General upper bound 6 * ceil(n / delta) for graphs of min degree delta >= 1.
int kkp_upper_bound(int n, int delta);

// Min-degree threshold n/(K-1) + 29*K*n/sqrt(t) with t = (n / ln n)^(1/3),
// below which the dense pipeline's guarantee is void. Returned unrounded.
double delta_threshold(int K, std::int64_t n);

// Weighting file format: "m k" header then m weights in edge-index order.
// The loader does not enforce the cap; verification reports violations.
EdgeWeighting load_weighting(std::istream& in);
EdgeWeighting load_weighting_file(const std::string& path);
void save_weighting(const EdgeWeighting& w, std::ostream& out);
void save_weighting_file(const EdgeWeighting& w, const std::string& path);

}  // namespace irrs
