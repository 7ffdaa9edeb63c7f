#include "irrs/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace irrs {

WeightedDegrees weighted_degrees(const Graph& g, const EdgeWeighting& w) {
  if (static_cast<int>(w.w.size()) != g.m())
    throw std::invalid_argument("weighting has " + std::to_string(w.w.size()) +
                                " entries for " + std::to_string(g.m()) + " edges");
  WeightedDegrees d;
  d.sums.assign(g.n, 0);
  for (int e = 0; e < g.m(); ++e) {
    d.sums[g.edges[e].first] += w.w[e];
    d.sums[g.edges[e].second] += w.w[e];
  }
  return d;
}

bool is_irregular(const Graph& g, const EdgeWeighting& w) {
  auto sums = weighted_degrees(g, w).sums;
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

std::optional<int> find_cap_violation(const EdgeWeighting& w) {
  for (std::size_t e = 0; e < w.w.size(); ++e)
    if (w.w[e] < 1 || w.w[e] > w.k) return static_cast<int>(e);
  return std::nullopt;
}

std::optional<Collision> first_collision(const Graph& g, const EdgeWeighting& w) {
  auto sums = weighted_degrees(g, w).sums;
  std::vector<std::pair<std::int64_t, int>> by_sum(g.n);
  for (int v = 0; v < g.n; ++v) by_sum[v] = {sums[v], v};
  std::sort(by_sum.begin(), by_sum.end());
  for (int i = 0; i + 1 < g.n; ++i)
    if (by_sum[i].first == by_sum[i + 1].first)
      return Collision{by_sum[i].second, by_sum[i + 1].second, by_sum[i].first};
  return std::nullopt;
}

int lower_bound_regular(int n, int d) {
  if (d < 1 || d >= n) throw std::invalid_argument("need 1 <= d < n");
  // ceil((n + d - 1) / d)
  return static_cast<int>((static_cast<long long>(n) + 2 * d - 2) / d);
}

int kkp_upper_bound(int n, int delta) {
  if (n < 1 || delta < 1) throw std::invalid_argument("need n >= 1 and delta >= 1");
  return static_cast<int>(6 * ((static_cast<long long>(n) + delta - 1) / delta));
}

double delta_threshold(int K, std::int64_t n) {
  if (K < 3) throw std::invalid_argument("K must be at least 3");
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const double nn = static_cast<double>(n);
  const double t = std::cbrt(nn / std::log(nn));
  return nn / (K - 1) + 29.0 * K * nn / std::sqrt(t);
}

namespace {

bool weight_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

EdgeWeighting load_weighting(std::istream& in) {
  std::string line;
  if (!weight_line(in, line)) throw std::runtime_error("weighting file: missing header");
  std::istringstream head(line);
  long long m = 0, k = 0;
  std::string rest;
  if (!(head >> m >> k) || (head >> rest) || m < 0 || k < 1)
    throw std::runtime_error("weighting file: expected header \"m k\"");
  EdgeWeighting w;
  w.k = static_cast<int>(k);
  w.w.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    if (!weight_line(in, line))
      throw std::runtime_error("weighting file: expected " + std::to_string(m) +
                               " weights, found " + std::to_string(e));
    std::istringstream ss(line);
    long long val = 0;
    if (!(ss >> val) || (ss >> rest))
      throw std::runtime_error("weighting file: bad weight line \"" + line + "\"");
    w.w.push_back(static_cast<int>(val));
  }
  if (weight_line(in, line))
    throw std::runtime_error("weighting file: extra content after " + std::to_string(m) +
                             " weights");
  return w;
}

EdgeWeighting load_weighting_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weighting file: " + path);
  return load_weighting(in);
}

void save_weighting(const EdgeWeighting& w, std::ostream& out) {
  out << w.w.size() << ' ' << w.k << '\n';
  for (int x : w.w) out << x << '\n';
}

void save_weighting_file(const EdgeWeighting& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  save_weighting(w, out);
}

}  // namespace irrs
