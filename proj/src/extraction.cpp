#include "radalign/extraction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace radalign {

std::vector<ExtractionResult> extract_corpus(LLMBackend& backend,
                                             const PromptTemplate& prompt_template,
                                             const std::vector<ReportRecord>& reports,
                                             const ExtractionOptions& options) {
  if (reports.empty()) throw std::invalid_argument("extract_corpus: no reports");
  if (options.max_concurrency < 1)
    throw std::invalid_argument("extract_corpus: max_concurrency must be positive");
  if (options.retry_budget < 0)
    throw std::invalid_argument("extract_corpus: negative retry budget");
  prompt_template.validate();

  const int num_classes = static_cast<int>(prompt_template.vocabulary.size());
  std::vector<ExtractionResult> results(reports.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= reports.size()) return;
      const ReportRecord& report = reports[i];
      ExtractionResult& out = results[i];
      out.report_id = report.id;
      out.backend_name = backend.name();

      const BuiltPrompt prompt = build_prompt(prompt_template, report);
      std::string raw;
      bool got_response = false;
      std::string last_transport_error;
      for (int attempt = 0; attempt <= options.retry_budget; ++attempt) {
        try {
          raw = backend.complete(prompt.system, prompt.user);
          got_response = true;
          break;
        } catch (const TransportError& e) {
          last_transport_error = e.what();
          if (attempt < options.retry_budget && options.retry_backoff_ms > 0)
            std::this_thread::sleep_for(std::chrono::milliseconds(options.retry_backoff_ms));
        }
      }
      if (!got_response) {
        out.error = FormatError{"transport: " + last_transport_error,
                                FormatErrorReason::unparseable};
        continue;
      }
      ParseOutcome parsed = parse_response(raw, num_classes, prompt_template.vocabulary);
      if (std::holds_alternative<LabelVector>(parsed))
        out.label = std::get<LabelVector>(std::move(parsed));
      else
        out.error = std::get<FormatError>(std::move(parsed));
    }
  };

  const size_t n_threads =
      std::min<size_t>(static_cast<size_t>(options.max_concurrency), reports.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

ExtractionSummary summarize(const std::vector<ExtractionResult>& results) {
  ExtractionSummary s;
  s.n_reports = results.size();
  for (const auto& r : results) {
    if (r.ok()) {
      ++s.n_ok;
      continue;
    }
    switch (r.error->reason) {
      case FormatErrorReason::wrong_count: ++s.n_wrong_count; break;
      case FormatErrorReason::non_binary_token: ++s.n_non_binary; break;
      case FormatErrorReason::unparseable: ++s.n_unparseable; break;
    }
  }
  return s;
}

void write_extraction_results(const std::filesystem::path& path,
                              const std::vector<ExtractionResult>& results) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path.string());
  for (const auto& r : results) {
    nlohmann::json j{{"report_id", r.report_id}, {"backend", r.backend_name}};
    if (r.ok()) {
      std::vector<int> vals;
      vals.reserve(r.label->values.size());
      for (double v : r.label->values) vals.push_back(v == 1.0 ? 1 : 0);
      j["labels"] = vals;
    } else {
      j["error"] = {{"reason", to_string(r.error->reason)},
                    {"raw_response", r.error->raw_response}};
    }
    f << j.dump() << "\n";
  }
  if (!f) throw std::runtime_error("short write: " + path.string());
}

std::vector<ExtractionResult> read_extraction_results(
    const std::filesystem::path& path, const std::vector<std::string>& vocabulary) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open extraction results: " + path.string());
  std::vector<ExtractionResult> results;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    ExtractionResult r;
    r.report_id = j.at("report_id").get<std::string>();
    r.backend_name = j.at("backend").get<std::string>();
    if (j.contains("labels")) {
      LabelVector l;
      l.kind = LabelKind::hard;
      l.vocabulary = vocabulary;
      for (const auto& v : j.at("labels")) l.values.push_back(v.get<int>() == 1 ? 1.0 : 0.0);
      l.validate();
      r.label = std::move(l);
    } else {
      r.error = FormatError{j.at("error").at("raw_response").get<std::string>(),
                            format_error_reason_from_string(
                                j.at("error").at("reason").get<std::string>())};
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace radalign
