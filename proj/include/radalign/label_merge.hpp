#pragma once

#include <string>
#include <vector>

#include "radalign/extraction.hpp"

namespace radalign {

struct MergedLabels {
  std::vector<std::string> ids;
  std::vector<LabelVector> labels;        // soft, values on the grid {0, 1/B, ..., 1}
  std::vector<std::string> dropped_ids;   // reports where every backend errored
};

// Averages successfully parsed vectors across backends, per report. A report
// with at least one parse uses only its parsed backends; reports where every
// backend errored are dropped and reported. Lists must be aligned by
// report_id (same reports, same order) or an invalid-argument error is thrown.
MergedLabels merge_labels(const std::vector<std::vector<ExtractionResult>>& per_backend);

}  // namespace radalign
