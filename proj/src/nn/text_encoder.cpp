#include "radalign/nn/text_encoder.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace radalign::nn {

namespace {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

HashBagEncoder::HashBagEncoder(int n_buckets, int dim) : n_buckets_(n_buckets), dim_(dim) {
  if (n_buckets < 1 || dim < 1)
    throw std::invalid_argument("hash bag encoder: buckets and dim must be positive");
  embeddings_.name = "text.embeddings";
  embeddings_.value = Tensor({n_buckets, dim});
}

void HashBagEncoder::init(Rng& rng) {
  Rng r = rng.fork("text-init");
  const double stddev = 1.0 / std::sqrt(static_cast<double>(dim_));
  for (double& w : embeddings_.value.data) w = r.normal(0.0, stddev);
}

std::vector<std::string> HashBagEncoder::tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    const unsigned char u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) {
      cur += static_cast<char>(std::tolower(u));
    } else if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

std::vector<int64_t> HashBagEncoder::bucket_ids(const std::string& text) const {
  std::vector<int64_t> ids;
  for (const auto& tok : tokenize(text))
    ids.push_back(static_cast<int64_t>(fnv1a64(tok) % static_cast<uint64_t>(n_buckets_)));
  return ids;
}

std::vector<double> HashBagEncoder::embed(const std::string& text) const {
  return embed_buckets(bucket_ids(text));
}

std::vector<double> HashBagEncoder::embed_buckets(const std::vector<int64_t>& buckets) const {
  std::vector<double> out(static_cast<size_t>(dim_), 0.0);
  if (buckets.empty()) return out;  // empty text embeds to the origin
  for (int64_t b : buckets) {
    const double* row = embeddings_.value.data.data() + b * dim_;
    for (int d = 0; d < dim_; ++d) out[static_cast<size_t>(d)] += row[d];
  }
  const double inv = 1.0 / static_cast<double>(buckets.size());
  for (double& v : out) v *= inv;
  return out;
}

void HashBagEncoder::backward(const std::vector<int64_t>& buckets,
                              const std::vector<double>& d_out, Tensor& d_embeddings) const {
  if (buckets.empty()) return;
  const double inv = 1.0 / static_cast<double>(buckets.size());
  for (int64_t b : buckets) {
    double* row = d_embeddings.data.data() + b * dim_;
    for (int d = 0; d < dim_; ++d) row[d] += inv * d_out[static_cast<size_t>(d)];
  }
}

}  // namespace radalign::nn
