#pragma once

#include <vector>

namespace radalign {

struct ScalingPoint {
  double n = 0.0;            // training set size
  double performance = 0.0;  // e.g. AUC
};

// Power law performance = a * n^b fitted by least squares in log-log space.
struct ScalingLawFit {
  double a = 0.0;
  double b = 0.0;
  double residual = 0.0;  // RMS residual of log(performance)
};

// Requires >= 2 points with distinct n; all inputs must be positive. Exact
// power-law inputs are recovered with zero residual.
ScalingLawFit fit_scaling_law(const std::vector<ScalingPoint>& points);

}  // namespace radalign
