#pragma once

#include <cstdint>
#include <vector>

#include "radalign/nn/layers.hpp"

namespace radalign::nn {

struct AdamWConfig {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.01;
};

// AdamW with decoupled weight decay. Moment tensors are ordered like the
// parameter list given at construction.
class AdamW {
 public:
  AdamW(const AdamWConfig& config, const std::vector<Param*>& params);

  // grads must be ordered like the construction parameter list.
  void step(const std::vector<Param*>& params, const std::vector<Tensor>& grads);

  int64_t step_count() const { return t_; }
  const AdamWConfig& config() const { return config_; }

  // Serialization access for checkpoints.
  std::vector<Tensor>& moments_m() { return m_; }
  std::vector<Tensor>& moments_v() { return v_; }
  void set_step_count(int64_t t) { t_ = t; }

 private:
  AdamWConfig config_;
  int64_t t_ = 0;
  std::vector<Tensor> m_, v_;
};

}  // namespace radalign::nn
