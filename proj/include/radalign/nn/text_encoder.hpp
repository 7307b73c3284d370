#pragma once

#include <string>
#include <vector>

#include "radalign/nn/layers.hpp"

namespace radalign::nn {

// Text embedding contract: fixed output dimension, deterministic given
// weights.
class TextEncoder {
 public:
  virtual ~TextEncoder() = default;
  virtual int dim() const = 0;
  virtual std::vector<double> embed(const std::string& text) const = 0;
};

// Deterministic token-hash bag-of-embeddings encoder: lowercase alphanumeric
// tokens hash (FNV-1a) into a trainable bucket table and the text embedding is
// the mean of its token rows. Adequate for template reports; heavier encoders
// plug in behind the TextEncoder contract.
class HashBagEncoder final : public TextEncoder {
 public:
  HashBagEncoder(int n_buckets, int dim);

  void init(Rng& rng);

  int dim() const override { return dim_; }
  int n_buckets() const { return n_buckets_; }

  static std::vector<std::string> tokenize(const std::string& text);
  std::vector<int64_t> bucket_ids(const std::string& text) const;

  std::vector<double> embed(const std::string& text) const override;
  std::vector<double> embed_buckets(const std::vector<int64_t>& buckets) const;

  // Accumulates the bag gradient into d_embeddings ({n_buckets, dim}).
  void backward(const std::vector<int64_t>& buckets, const std::vector<double>& d_out,
                Tensor& d_embeddings) const;

  Param& embeddings() { return embeddings_; }
  const Param& embeddings() const { return embeddings_; }

 private:
  int n_buckets_ = 0;
  int dim_ = 0;
  Param embeddings_;  // {n_buckets, dim}
};

}  // namespace radalign::nn
