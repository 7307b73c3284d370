#include "radalign/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace radalign {

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("auc: scores/labels length mismatch");
  size_t n_pos = 0, n_neg = 0;
  for (int l : labels) {
    if (l == 1) ++n_pos;
    else if (l == 0) ++n_neg;
    else throw std::invalid_argument("auc: labels must be 0 or 1");
  }
  if (n_pos == 0 || n_neg == 0)
    throw UndefinedMetricError("auc: needs at least one positive and one negative");

  // Average ranks (1-based) with ties sharing their mid-rank.
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return scores[a] < scores[b]; });
  double pos_rank_sum = 0.0;
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t k = i; k <= j; ++k)
      if (labels[order[k]] == 1) pos_rank_sum += mid_rank;
    i = j + 1;
  }
  const double u = pos_rank_sum - static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0) / 2.0;
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

ThresholdPolicy ThresholdPolicy::from_string(const std::string& s) {
  if (s == "youden") return youden();
  if (s == "max_f1") return max_f1();
  if (s.rfind("fixed", 0) == 0) {
    if (s == "fixed") return fixed(0.5);
    if (s.size() > 6 && s[5] == ':') return fixed(std::stod(s.substr(6)));
  }
  throw std::invalid_argument("unknown threshold policy: " + s);
}

namespace {

BinaryMetrics metrics_at_threshold(const std::vector<double>& scores,
                                   const std::vector<int>& labels, double threshold) {
  double tp = 0, fp = 0, tn = 0, fn = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    const bool pred = scores[i] >= threshold;
    const bool truth = labels[i] == 1;
    if (pred && truth) ++tp;
    else if (pred) ++fp;
    else if (truth) ++fn;
    else ++tn;
  }
  BinaryMetrics m;
  m.threshold = threshold;
  const double n = tp + fp + tn + fn;
  m.accuracy = n > 0 ? (tp + tn) / n : 0.0;
  m.sensitivity = (tp + fn) > 0 ? tp / (tp + fn) : 0.0;
  m.specificity = (tn + fp) > 0 ? tn / (tn + fp) : 0.0;
  m.precision = (tp + fp) > 0 ? tp / (tp + fp) : 0.0;
  m.f1 = (m.precision + m.sensitivity) > 0
             ? 2.0 * m.precision * m.sensitivity / (m.precision + m.sensitivity)
             : 0.0;
  return m;
}

}  // namespace

BinaryMetrics classification_metrics(const std::vector<double>& scores,
                                     const std::vector<int>& labels,
                                     const ThresholdPolicy& policy) {
  const double roc_auc = auc(scores, labels);  // also validates inputs

  double threshold = policy.fixed_value;
  if (policy.kind != ThresholdPolicy::Kind::fixed) {
    std::vector<double> candidates = scores;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    double best_objective = -1.0;
    for (double t : candidates) {
      const BinaryMetrics m = metrics_at_threshold(scores, labels, t);
      const double objective = policy.kind == ThresholdPolicy::Kind::youden
                                   ? m.sensitivity + m.specificity - 1.0
                                   : m.f1;
      if (objective > best_objective) {
        best_objective = objective;
        threshold = t;
      }
    }
  }
  BinaryMetrics m = metrics_at_threshold(scores, labels, threshold);
  m.auc = roc_auc;
  return m;
}

}  // namespace radalign
