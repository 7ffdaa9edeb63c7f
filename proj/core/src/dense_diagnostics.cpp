#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "irrs/dense.hpp"

namespace irrs {

std::pair<double, double> chernoff_one_sided(std::int64_t n, double p, double dev) {
  if (n < 1) throw std::invalid_argument("trial count must be positive");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("probability must lie in (0, 1)");
  const double mean = static_cast<double>(n) * p;
  if (!(dev >= 0.0 && dev <= mean))
    throw std::invalid_argument("deviation must lie in [0, np]");
  return {std::exp(-dev * dev / (3.0 * mean)), std::exp(-dev * dev / (2.0 * mean))};
}

double chernoff_two_sided(std::int64_t n, double p, double dev) {
  if (n < 1) throw std::invalid_argument("trial count must be positive");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("probability must lie in (0, 1)");
  if (!(dev >= 0.0)) throw std::invalid_argument("deviation must be nonnegative");
  const double mean = static_cast<double>(n) * p;
  return std::min(1.0, 2.0 * std::exp(-dev * dev / (3.0 * std::max(mean, dev))));
}

double union_bound_diagnostic(std::int64_t n, int K, const IntervalPlan& plan) {
  return (4.0 + 2.0 * K * plan.t) / static_cast<double>(n);
}

}  // namespace irrs
