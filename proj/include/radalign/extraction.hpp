#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "radalign/backend.hpp"
#include "radalign/prompt.hpp"
#include "radalign/response_parser.hpp"

namespace radalign {

// One LLM's parsed answer for one report: exactly one of label/error is set.
struct ExtractionResult {
  std::string report_id;
  std::string backend_name;
  std::optional<LabelVector> label;
  std::optional<FormatError> error;

  bool ok() const { return label.has_value(); }
};

struct ExtractionOptions {
  int max_concurrency = 4;
  int retry_budget = 2;       // transport retries per report
  int retry_backoff_ms = 0;   // sleep between retries
};

struct ExtractionSummary {
  size_t n_reports = 0;
  size_t n_ok = 0;
  size_t n_wrong_count = 0;
  size_t n_non_binary = 0;
  size_t n_unparseable = 0;
};

// Drives the backend over the corpus with at most max_concurrency requests in
// flight. Transport failures are retried up to retry_budget times, then
// recorded as FormatError(unparseable). Results come back in input order.
std::vector<ExtractionResult> extract_corpus(LLMBackend& backend,
                                             const PromptTemplate& prompt_template,
                                             const std::vector<ReportRecord>& reports,
                                             const ExtractionOptions& options = {});

ExtractionSummary summarize(const std::vector<ExtractionResult>& results);

// JSONL persistence of extraction results.
void write_extraction_results(const std::filesystem::path& path,
                              const std::vector<ExtractionResult>& results);
std::vector<ExtractionResult> read_extraction_results(
    const std::filesystem::path& path, const std::vector<std::string>& vocabulary);

}  // namespace radalign
