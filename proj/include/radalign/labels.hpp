#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace radalign {

enum class LabelKind { hard, soft };

// Per-scan abnormality annotation over an ordered vocabulary of C classes.
// Hard labels are {0,1}; soft labels (multi-model merges) lie in [0,1].
struct LabelVector {
  std::vector<double> values;
  std::vector<std::string> vocabulary;
  LabelKind kind = LabelKind::hard;

  void validate() const;
  size_t num_classes() const { return values.size(); }
};

LabelVector make_hard_labels(std::vector<double> values,
                             std::vector<std::string> vocabulary);

// Aligned (id, label) rows, one per scan.
struct LabelTable {
  std::vector<std::string> ids;
  std::vector<LabelVector> labels;  // all share one vocabulary

  const std::vector<std::string>& vocabulary() const;
  size_t size() const { return ids.size(); }
};

// CSV with header "id,<class1>,...,<classC>". Hard values render as "0"/"1",
// soft values as round-trippable decimals. Class names must not contain
// commas or newlines (no quoting is applied).
void write_labels_csv(const std::filesystem::path& path, const LabelTable& table);
LabelTable read_labels_csv(const std::filesystem::path& path);

}  // namespace radalign
