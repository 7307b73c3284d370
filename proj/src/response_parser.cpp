#include "radalign/response_parser.hpp"

#include <stdexcept>

namespace radalign {

const char* to_string(FormatErrorReason r) {
  switch (r) {
    case FormatErrorReason::wrong_count: return "wrong_count";
    case FormatErrorReason::non_binary_token: return "non_binary_token";
    case FormatErrorReason::unparseable: return "unparseable";
  }
  return "unparseable";
}

FormatErrorReason format_error_reason_from_string(const std::string& s) {
  if (s == "wrong_count") return FormatErrorReason::wrong_count;
  if (s == "non_binary_token") return FormatErrorReason::non_binary_token;
  if (s == "unparseable") return FormatErrorReason::unparseable;
  throw std::invalid_argument("unknown format error reason: " + s);
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_fence_line(const std::string& line) {
  const std::string t = trim(line);
  if (t.size() < 3) return false;
  for (char c : t)
    if (c != '`') return false;
  return true;
}

// Strips bare ``` fence lines from the start and end of the payload.
std::string strip_fences(const std::string& raw) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : raw) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);
  size_t b = 0, e = lines.size();
  while (b < e && trim(lines[b]).empty()) ++b;
  while (e > b && trim(lines[e - 1]).empty()) --e;
  if (b < e && is_fence_line(lines[b])) ++b;
  if (e > b && is_fence_line(lines[e - 1])) --e;
  std::string out;
  for (size_t i = b; i < e; ++i) {
    if (!out.empty()) out += "\n";
    out += lines[i];
  }
  return out;
}

bool is_numeric_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = t[0] == '-' || t[0] == '+' ? 1 : 0;
  if (i == t.size()) return false;
  bool seen_dot = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '.') {
      if (seen_dot) return false;
      seen_dot = true;
    } else if (t[i] < '0' || t[i] > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

ParseOutcome parse_response(const std::string& raw, int num_classes,
                            const std::vector<std::string>& vocabulary) {
  if (num_classes < 1) throw std::invalid_argument("parse_response: num_classes must be >= 1");
  const std::string payload = trim(strip_fences(raw));
  if (payload.empty()) return FormatError{raw, FormatErrorReason::unparseable};

  std::vector<std::string> tokens;
  std::string cur;
  for (char c : payload) {
    if (c == ',') {
      tokens.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  tokens.push_back(trim(cur));

  bool any_non_numeric = false, any_non_binary = false;
  for (const auto& t : tokens) {
    if (!is_numeric_token(t))
      any_non_numeric = true;
    else if (t != "0" && t != "1")
      any_non_binary = true;
  }
  if (any_non_numeric) return FormatError{raw, FormatErrorReason::unparseable};
  if (static_cast<int>(tokens.size()) != num_classes)
    return FormatError{raw, FormatErrorReason::wrong_count};
  if (any_non_binary) return FormatError{raw, FormatErrorReason::non_binary_token};

  LabelVector label;
  label.kind = LabelKind::hard;
  label.vocabulary = vocabulary;
  label.values.reserve(tokens.size());
  for (const auto& t : tokens) label.values.push_back(t == "1" ? 1.0 : 0.0);
  return label;
}

std::string format_label_vector(const LabelVector& label) {
  label.validate();
  if (label.kind != LabelKind::hard)
    throw std::invalid_argument("format_label_vector: only hard labels have a wire form");
  std::string out;
  for (size_t i = 0; i < label.values.size(); ++i) {
    if (i) out += ",";
    out += label.values[i] == 1.0 ? "1" : "0";
  }
  return out;
}

}  // namespace radalign
