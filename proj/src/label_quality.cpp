#include "radalign/label_quality.hpp"

#include <stdexcept>

namespace radalign {

LabelQualityReport evaluate_label_quality(const std::vector<LabelVector>& candidate,
                                          const std::vector<LabelVector>& reference) {
  if (candidate.size() != reference.size())
    throw std::invalid_argument("evaluate_label_quality: candidate/reference length mismatch");
  if (candidate.empty()) throw std::invalid_argument("evaluate_label_quality: empty input");
  const auto& vocab = reference.front().vocabulary;
  for (size_t i = 0; i < candidate.size(); ++i) {
    if (candidate[i].vocabulary != vocab || reference[i].vocabulary != vocab)
      throw std::invalid_argument("evaluate_label_quality: vocabulary mismatch at row " +
                                  std::to_string(i));
    if (reference[i].kind != LabelKind::hard)
      throw std::invalid_argument("evaluate_label_quality: reference must be hard labels");
  }

  LabelQualityReport report;
  report.n_reports = candidate.size();
  const size_t C = vocab.size();

  for (size_t c = 0; c < C; ++c) {
    double tp = 0, fp = 0, tn = 0, fn = 0;
    for (size_t i = 0; i < candidate.size(); ++i) {
      const bool pred = candidate[i].values[c] >= 0.5;  // ties positive
      const bool truth = reference[i].values[c] == 1.0;
      if (pred && truth) ++tp;
      else if (pred && !truth) ++fp;
      else if (!pred && !truth) ++tn;
      else ++fn;
    }
    ClassQualityMetrics m;
    const double n = tp + fp + tn + fn;
    m.accuracy = n > 0 ? (tp + tn) / n : 0.0;
    m.sensitivity = (tp + fn) > 0 ? tp / (tp + fn) : 0.0;
    m.specificity = (tn + fp) > 0 ? tn / (tn + fp) : 0.0;
    m.precision = (tp + fp) > 0 ? tp / (tp + fp) : 0.0;
    m.f1 = (m.precision + m.sensitivity) > 0
               ? 2.0 * m.precision * m.sensitivity / (m.precision + m.sensitivity)
               : 0.0;
    m.auc = (m.sensitivity + m.specificity) / 2.0;  // rank AUC of a binary score
    report.per_class[vocab[c]] = m;

    const bool has_pos = (tp + fn) > 0, has_neg = (tn + fp) > 0;
    if (has_pos && has_neg) {
      report.macro.auc += m.auc;
      report.macro.accuracy += m.accuracy;
      report.macro.precision += m.precision;
      report.macro.f1 += m.f1;
      report.macro.sensitivity += m.sensitivity;
      report.macro.specificity += m.specificity;
      ++report.n_macro_classes;
    }
  }
  if (report.n_macro_classes > 0) {
    const double k = static_cast<double>(report.n_macro_classes);
    report.macro.auc /= k;
    report.macro.accuracy /= k;
    report.macro.precision /= k;
    report.macro.f1 /= k;
    report.macro.sensitivity /= k;
    report.macro.specificity /= k;
  }
  return report;
}

}  // namespace radalign
