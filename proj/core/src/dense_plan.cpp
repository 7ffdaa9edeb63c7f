#include <cmath>
#include <stdexcept>

#include "irrs/dense.hpp"

namespace irrs {

std::int64_t IntervalPlan::interval_of(double value) const {
  if (value < boundary(0)) return 0;
  double w = width();
  auto j = static_cast<std::int64_t>(std::floor((value - static_cast<double>(delta)) / w)) + 1;
  if (j < 1) j = 1;
  if (j > interval_count + 1) j = interval_count + 1;
  // float-safe nudge onto the right half-open cell
  while (j >= 1 && value < boundary(j - 1)) --j;
  while (j <= interval_count && value >= boundary(j)) ++j;
  return j;
}

IntervalPlan plan_intervals(std::int64_t n, std::int64_t delta, int K, const PlanOverrides& ov) {
  if (K < 3) throw std::invalid_argument("K must be at least 3");
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (delta < 1) throw std::invalid_argument("delta must be positive");
  if (ov.t && !(*ov.t > 1.0)) throw std::invalid_argument("override t must exceed 1");
  if (ov.lambda && *ov.lambda < 3) throw std::invalid_argument("override lambda must be >= 3");

  IntervalPlan p;
  p.K = K;
  p.n = n;
  p.delta = delta;
  const double nn = static_cast<double>(n);
  if (ov.t) {
    p.t = *ov.t;
    p.t_from_formula = false;
  } else {
    p.t = std::cbrt(nn / std::log(nn));
  }
  const double sqrt_t = std::sqrt(p.t);
  if (ov.lambda) {
    p.lambda = *ov.lambda;
    p.lambda_from_formula = false;
  } else {
    p.lambda = static_cast<int>(std::floor(sqrt_t / (8.0 * K * K)));
  }
  p.margin = 3.0 * K * nn / (p.t * sqrt_t);
  p.interval_count = static_cast<std::int64_t>(std::ceil(K * p.t));
  p.delta_threshold_value = delta_threshold(K, n);
  p.delta_ok = static_cast<double>(delta) >= p.delta_threshold_value;
  p.lambda_ok = p.lambda >= 3;
  return p;
}

}  // namespace irrs
