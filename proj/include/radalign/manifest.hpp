#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace radalign {

// Free-text radiology report paired with a volume.
struct ReportRecord {
  std::string id;
  std::string text;
  std::string paired_volume_id;
};

// One line of the dataset manifest (JSONL, UTF-8).
struct ManifestEntry {
  std::string id;
  std::string volume_path;  // relative to the manifest file unless absolute
  std::string report_text;
  std::string split;  // "train" | "validation" | "external"
};

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path,
                    const std::vector<ManifestEntry>& entries);

// Validates that ids are unique and splits are named. Throws on violation.
void validate_manifest(const std::vector<ManifestEntry>& entries);

}  // namespace radalign
