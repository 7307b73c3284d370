#pragma once

#include <map>
#include <string>
#include <vector>

#include "radalign/manifest.hpp"

namespace radalign {

// Classification prompt: the system text defines each category and the strict
// output format; the user pattern carries exactly one "{text}" placeholder.
struct PromptTemplate {
  std::string system_text;
  std::string user_text_pattern;
  std::vector<std::string> vocabulary;

  // Checks the invariants: every vocabulary name occurs exactly once in the
  // system text and the pattern has exactly one placeholder.
  void validate() const;
};

// Builds the default template: one numbered definition line per class plus the
// strict output-format instruction. Definitions can be overridden per class.
PromptTemplate default_prompt_template(
    const std::vector<std::string>& vocabulary,
    const std::map<std::string, std::string>& definitions = {});

struct BuiltPrompt {
  std::string system;
  std::string user;
};

BuiltPrompt build_prompt(const PromptTemplate& t, const ReportRecord& report);

}  // namespace radalign
