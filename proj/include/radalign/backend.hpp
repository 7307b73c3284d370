#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace radalign {

// Raised for network-level failures (timeouts, connection errors, 5xx). These
// are retried by the extraction driver; anything else propagates.
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

// Completion backend contract. complete() must be total: it returns the raw
// response text or throws TransportError within its own timeout; it must be
// safe to call from several threads at once.
class LLMBackend {
 public:
  virtual ~LLMBackend() = default;
  virtual const std::string& name() const = 0;
  virtual std::string complete(const std::string& system, const std::string& user) = 0;
};

// Deterministic offline backend. It reads the report text out of the user
// prompt and answers per class: 0 when the sentence mentioning the class name
// carries an explicit negation cue ("no evidence", "absent", leading "no"),
// 1 when mentioned otherwise, 0 when not mentioned at all.
class MockBackend : public LLMBackend {
 public:
  explicit MockBackend(std::vector<std::string> vocabulary);
  const std::string& name() const override { return name_; }
  std::string complete(const std::string& system, const std::string& user) override;

 private:
  std::string name_ = "mock";
  std::vector<std::string> vocabulary_;
};

struct HttpBackendConfig {
  std::string name;
  std::string base_url;      // e.g. http://host:port
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key_env;   // environment variable holding the bearer token
  int timeout_sec = 60;
};

// Minimal OpenAI-style chat-completions client (vendor-agnostic). Network and
// HTTP >= 500 failures surface as TransportError; malformed response bodies
// are returned verbatim so the parser can classify them.
std::unique_ptr<LLMBackend> make_http_backend(const HttpBackendConfig& config);

}  // namespace radalign
