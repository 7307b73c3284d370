#include "radalign/label_merge.hpp"

#include <stdexcept>

namespace radalign {

MergedLabels merge_labels(const std::vector<std::vector<ExtractionResult>>& per_backend) {
  if (per_backend.empty()) throw std::invalid_argument("merge_labels: no backends");
  const size_t n = per_backend.front().size();
  for (const auto& list : per_backend) {
    if (list.size() != n)
      throw std::invalid_argument("merge_labels: backend result lists differ in length");
    for (size_t i = 0; i < n; ++i)
      if (list[i].report_id != per_backend.front()[i].report_id)
        throw std::invalid_argument("merge_labels: misaligned report ids at index " +
                                    std::to_string(i));
  }

  MergedLabels out;
  for (size_t i = 0; i < n; ++i) {
    std::vector<const LabelVector*> parsed;
    for (const auto& list : per_backend)
      if (list[i].ok()) parsed.push_back(&*list[i].label);
    if (parsed.empty()) {
      out.dropped_ids.push_back(per_backend.front()[i].report_id);
      continue;
    }
    LabelVector merged;
    merged.kind = LabelKind::soft;
    merged.vocabulary = parsed.front()->vocabulary;
    merged.values.assign(parsed.front()->values.size(), 0.0);
    for (const LabelVector* l : parsed) {
      if (l->vocabulary != merged.vocabulary)
        throw std::invalid_argument("merge_labels: vocabulary mismatch across backends");
      for (size_t c = 0; c < merged.values.size(); ++c) merged.values[c] += l->values[c];
    }
    for (double& v : merged.values) v /= static_cast<double>(parsed.size());
    merged.validate();
    out.ids.push_back(per_backend.front()[i].report_id);
    out.labels.push_back(std::move(merged));
  }
  return out;
}

}  // namespace radalign
