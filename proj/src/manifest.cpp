#include "radalign/manifest.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace radalign {

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open manifest: " + path.string());
  std::vector<ManifestEntry> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("manifest " + path.string() + ":" + std::to_string(lineno) +
                               ": " + e.what());
    }
    ManifestEntry e;
    e.id = j.at("id").get<std::string>();
    e.volume_path = j.at("volume_path").get<std::string>();
    e.report_text = j.at("report_text").get<std::string>();
    e.split = j.value("split", "train");
    entries.push_back(std::move(e));
  }
  validate_manifest(entries);
  return entries;
}

void write_manifest(const std::filesystem::path& path,
                    const std::vector<ManifestEntry>& entries) {
  validate_manifest(entries);
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path.string());
  for (const auto& e : entries) {
    nlohmann::json j{{"id", e.id},
                     {"volume_path", e.volume_path},
                     {"report_text", e.report_text},
                     {"split", e.split}};
    f << j.dump() << "\n";
  }
  if (!f) throw std::runtime_error("short write: " + path.string());
}

void validate_manifest(const std::vector<ManifestEntry>& entries) {
  std::set<std::string> seen;
  for (const auto& e : entries) {
    if (e.id.empty()) throw std::invalid_argument("manifest: empty id");
    if (!seen.insert(e.id).second)
      throw std::invalid_argument("manifest: duplicate id " + e.id);
    if (e.split != "train" && e.split != "validation" && e.split != "external")
      throw std::invalid_argument("manifest: unknown split '" + e.split + "' for " + e.id);
  }
}

}  // namespace radalign
