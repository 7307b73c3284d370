#pragma once

#include <map>
#include <string>
#include <vector>

#include "radalign/labels.hpp"

namespace radalign {

struct ClassQualityMetrics {
  double auc = 0.0;
  double accuracy = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
};

struct LabelQualityReport {
  std::map<std::string, ClassQualityMetrics> per_class;
  ClassQualityMetrics macro;  // averaged over classes with >=1 positive and >=1 negative
  size_t n_reports = 0;
  size_t n_macro_classes = 0;
};

// Scores candidate labels against reference labels via per-class confusion
// counts. Soft candidates are thresholded at 0.5 (ties positive). For binary
// candidates the rank AUC reduces to (sensitivity + specificity) / 2.
// Zero-denominator metrics report 0. Throws on vocabulary mismatch.
LabelQualityReport evaluate_label_quality(const std::vector<LabelVector>& candidate,
                                          const std::vector<LabelVector>& reference);

}  // namespace radalign
