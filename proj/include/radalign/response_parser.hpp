#pragma once

#include <string>
#include <variant>
#include <vector>

#include "radalign/labels.hpp"

namespace radalign {

enum class FormatErrorReason { wrong_count, non_binary_token, unparseable };

const char* to_string(FormatErrorReason r);
FormatErrorReason format_error_reason_from_string(const std::string& s);

struct FormatError {
  std::string raw_response;
  FormatErrorReason reason;
};

using ParseOutcome = std::variant<LabelVector, FormatError>;

// Strict parser for the "C comma-separated binary values" contract. Tolerated
// decoration: surrounding whitespace, a trailing newline, and bare ``` code
// fence lines. Classification precedence when multiple problems coexist:
// unparseable (non-numeric token) > wrong_count > non_binary_token.
// Never throws for format problems; they are data.
ParseOutcome parse_response(const std::string& raw, int num_classes,
                            const std::vector<std::string>& vocabulary);

// Renders a hard label vector as the comma-joined "0"/"1" wire form;
// parse_response inverts it exactly.
std::string format_label_vector(const LabelVector& label);

}  // namespace radalign
