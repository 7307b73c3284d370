#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace radalign {

// Raised when a metric has no defined value (for example AUC on single-class
// labels).
class UndefinedMetricError : public std::runtime_error {
 public:
  explicit UndefinedMetricError(const std::string& what) : std::runtime_error(what) {}
};

// Mann-Whitney AUC: probability that a random positive outranks a random
// negative, ties counted 1/2. Requires at least one positive and one negative.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct ThresholdPolicy {
  enum class Kind { youden, fixed, max_f1 };
  Kind kind = Kind::youden;
  double fixed_value = 0.5;

  static ThresholdPolicy youden() { return {Kind::youden, 0.0}; }
  static ThresholdPolicy fixed(double t) { return {Kind::fixed, t}; }
  static ThresholdPolicy max_f1() { return {Kind::max_f1, 0.0}; }
  static ThresholdPolicy from_string(const std::string& s);
};

struct BinaryMetrics {
  double auc = 0.0;
  double accuracy = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
  double threshold = 0.5;
};

// Thresholded classification metrics for one class. The threshold is chosen
// by the policy over the given scores (prediction is positive when
// score >= threshold); candidate thresholds are the observed scores.
// Zero-denominator metrics report 0.
BinaryMetrics classification_metrics(const std::vector<double>& scores,
                                     const std::vector<int>& labels,
                                     const ThresholdPolicy& policy);

}  // namespace radalign
