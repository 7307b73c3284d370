#include "radalign/scaling.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace radalign {

ScalingLawFit fit_scaling_law(const std::vector<ScalingPoint>& points) {
  if (points.size() < 2) throw std::invalid_argument("fit_scaling_law: need at least 2 points");
  std::set<double> distinct;
  for (const auto& p : points) {
    if (!(p.n > 0.0) || !(p.performance > 0.0))
      throw std::invalid_argument("fit_scaling_law: inputs must be positive");
    distinct.insert(p.n);
  }
  if (distinct.size() < 2)
    throw std::invalid_argument("fit_scaling_law: points must have distinct n");

  const double m = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& p : points) {
    mean_x += std::log(p.n);
    mean_y += std::log(p.performance);
  }
  mean_x /= m;
  mean_y /= m;
  double cov = 0.0, var = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(p.n) - mean_x;
    const double dy = std::log(p.performance) - mean_y;
    cov += dx * dy;
    var += dx * dx;
  }
  ScalingLawFit fit;
  fit.b = cov / var;
  const double log_a = mean_y - fit.b * mean_x;
  fit.a = std::exp(log_a);
  double ss = 0.0;
  for (const auto& p : points) {
    const double r = std::log(p.performance) - (log_a + fit.b * std::log(p.n));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

}  // namespace radalign
