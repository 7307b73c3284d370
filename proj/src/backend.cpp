#include "radalign/backend.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "httplib.h"
#include "json.hpp"

namespace radalign {

namespace {

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

MockBackend::MockBackend(std::vector<std::string> vocabulary)
    : vocabulary_(std::move(vocabulary)) {}

std::string MockBackend::complete(const std::string& /*system*/, const std::string& user) {
  const std::string text = lowercase(user);
  std::string out;
  for (size_t k = 0; k < vocabulary_.size(); ++k) {
    const std::string name = lowercase(vocabulary_[k]);
    int value = 0;
    const size_t pos = text.find(name);
    if (pos != std::string::npos) {
      const size_t sent_begin = text.rfind('.', pos);
      const size_t begin = sent_begin == std::string::npos ? 0 : sent_begin + 1;
      const size_t end = text.find('.', pos);
      const std::string sentence =
          trim(text.substr(begin, (end == std::string::npos ? text.size() : end) - begin));
      const bool negated = sentence.find("no evidence") != std::string::npos ||
                           sentence.find("absent") != std::string::npos ||
                           sentence.rfind("no ", 0) == 0;
      value = negated ? 0 : 1;
    }
    if (k) out += ",";
    out += value ? "1" : "0";
  }
  return out;
}

namespace {

class HttpBackend : public LLMBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
    if (config_.name.empty()) config_.name = "http";
    if (!config_.api_key_env.empty()) {
      const char* key = std::getenv(config_.api_key_env.c_str());
      if (key) api_key_ = key;
    }
  }

  const std::string& name() const override { return config_.name; }

  std::string complete(const std::string& system, const std::string& user) override {
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.timeout_sec, 0);
    client.set_read_timeout(config_.timeout_sec, 0);
    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    nlohmann::json body{
        {"model", config_.model},
        {"messages",
         {{{"role", "system"}, {"content", system}}, {{"role", "user"}, {"content", user}}}},
        {"temperature", 0.0}};

    auto res = client.Post(config_.path, headers, body.dump(), "application/json");
    if (!res)
      throw TransportError(config_.name + ": " + httplib::to_string(res.error()));
    if (res->status >= 500)
      throw TransportError(config_.name + ": HTTP " + std::to_string(res->status));
    if (res->status != 200)
      return res->body;  // 4xx bodies go to the parser as-is
    try {
      auto j = nlohmann::json::parse(res->body);
      return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      return res->body;
    }
  }

 private:
  HttpBackendConfig config_;
  std::string api_key_;
};

}  // namespace

std::unique_ptr<LLMBackend> make_http_backend(const HttpBackendConfig& config) {
  return std::make_unique<HttpBackend>(config);
}

}  // namespace radalign
