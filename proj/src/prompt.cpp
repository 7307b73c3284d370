#include "radalign/prompt.hpp"

#include <stdexcept>

namespace radalign {

namespace {
constexpr const char* kPlaceholder = "{text}";

size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  size_t count = 0, pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}
}  // namespace

void PromptTemplate::validate() const {
  if (vocabulary.empty()) throw std::invalid_argument("prompt template: empty vocabulary");
  for (const auto& name : vocabulary) {
    size_t n = count_occurrences(system_text, name);
    // A name that is a substring of another (longer) name would be counted
    // inside it too; subtract those containments.
    for (const auto& other : vocabulary) {
      if (&other == &name || other.size() <= name.size()) continue;
      if (other.find(name) != std::string::npos)
        n -= count_occurrences(system_text, other);
    }
    if (n != 1)
      throw std::invalid_argument("prompt template: '" + name + "' must appear exactly once");
  }
  if (count_occurrences(user_text_pattern, kPlaceholder) != 1)
    throw std::invalid_argument("prompt template: pattern needs exactly one {text} placeholder");
}

PromptTemplate default_prompt_template(
    const std::vector<std::string>& vocabulary,
    const std::map<std::string, std::string>& definitions) {
  PromptTemplate t;
  t.vocabulary = vocabulary;
  std::string sys =
      "You are a radiology report classifier. Decide for each of the "
      "following conditions whether the report describes its presence (1) or "
      "absence (0).\n";
  for (size_t i = 0; i < vocabulary.size(); ++i) {
    sys += std::to_string(i + 1) + ". " + vocabulary[i] + ": ";
    auto it = definitions.find(vocabulary[i]);
    sys += it != definitions.end() ? it->second
                                   : "any finding of this condition described in the report.";
    sys += "\n";
  }
  sys += "Respond with exactly " + std::to_string(vocabulary.size()) +
         " comma-separated binary values (0 or 1), one per condition, in the "
         "order listed above. Output nothing else.";
  t.system_text = std::move(sys);
  t.user_text_pattern = "Report: {text}";
  t.validate();
  return t;
}

BuiltPrompt build_prompt(const PromptTemplate& t, const ReportRecord& report) {
  t.validate();
  if (report.text.empty())
    throw std::invalid_argument("build_prompt: empty report text for " + report.id);
  std::string user = t.user_text_pattern;
  const size_t pos = user.find(kPlaceholder);
  user.replace(pos, std::string(kPlaceholder).size(), report.text);
  return BuiltPrompt{t.system_text, std::move(user)};
}

}  // namespace radalign
