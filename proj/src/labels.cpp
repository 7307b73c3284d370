#include "radalign/labels.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace radalign {

void LabelVector::validate() const {
  if (values.size() != vocabulary.size())
    throw std::invalid_argument("label vector: values/vocabulary length mismatch");
  for (double v : values) {
    if (kind == LabelKind::hard) {
      if (v != 0.0 && v != 1.0)
        throw std::invalid_argument("label vector: hard value not in {0,1}");
    } else if (v < 0.0 || v > 1.0) {
      throw std::invalid_argument("label vector: soft value outside [0,1]");
    }
  }
}

LabelVector make_hard_labels(std::vector<double> values,
                             std::vector<std::string> vocabulary) {
  LabelVector l{std::move(values), std::move(vocabulary), LabelKind::hard};
  l.validate();
  return l;
}

const std::vector<std::string>& LabelTable::vocabulary() const {
  if (labels.empty()) throw std::logic_error("label table: empty, no vocabulary");
  return labels.front().vocabulary;
}

namespace {

std::string format_value(double v, LabelKind kind) {
  if (kind == LabelKind::hard) return v == 1.0 ? "1" : "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void write_labels_csv(const std::filesystem::path& path, const LabelTable& table) {
  if (table.ids.size() != table.labels.size())
    throw std::invalid_argument("label table: ids/labels length mismatch");
  if (table.labels.empty()) throw std::invalid_argument("label table: nothing to write");
  const auto& vocab = table.vocabulary();
  for (const auto& name : vocab)
    if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos)
      throw std::invalid_argument("label csv: class name contains comma or newline: " + name);
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path.string());
  f << "id";
  for (const auto& name : vocab) f << "," << name;
  f << "\n";
  for (size_t i = 0; i < table.ids.size(); ++i) {
    const auto& l = table.labels[i];
    l.validate();
    if (l.vocabulary != vocab)
      throw std::invalid_argument("label csv: row " + table.ids[i] + " has mismatched vocabulary");
    f << table.ids[i];
    for (double v : l.values) f << "," << format_value(v, l.kind);
    f << "\n";
  }
  if (!f) throw std::runtime_error("short write: " + path.string());
}

LabelTable read_labels_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open labels csv: " + path.string());
  std::string line;
  if (!std::getline(f, line))
    throw std::runtime_error("labels csv: empty file " + path.string());
  auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "id")
    throw std::runtime_error("labels csv: bad header in " + path.string());
  std::vector<std::string> vocab(header.begin() + 1, header.end());

  LabelTable table;
  size_t lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw std::runtime_error("labels csv " + path.string() + ":" + std::to_string(lineno) +
                               ": expected " + std::to_string(header.size()) + " fields");
    LabelVector l;
    l.vocabulary = vocab;
    bool all_hard = true;
    for (size_t c = 1; c < fields.size(); ++c) {
      const std::string& s = fields[c];
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("labels csv " + path.string() + ":" + std::to_string(lineno) +
                                 ": bad value '" + s + "'");
      if (v != 0.0 && v != 1.0) all_hard = false;
      l.values.push_back(v);
    }
    l.kind = all_hard ? LabelKind::hard : LabelKind::soft;
    l.validate();
    table.ids.push_back(fields[0]);
    table.labels.push_back(std::move(l));
  }
  return table;
}

}  // namespace radalign
