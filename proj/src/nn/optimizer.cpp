#include "radalign/nn/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace radalign::nn {

AdamW::AdamW(const AdamWConfig& config, const std::vector<Param*>& params) : config_(config) {
  m_.reserve(params.size());
  v_.reserve(params.size());
  for (const Param* p : params) {
    m_.emplace_back(p->value.shape);
    v_.emplace_back(p->value.shape);
  }
}

void AdamW::step(const std::vector<Param*>& params, const std::vector<Tensor>& grads) {
  if (params.size() != m_.size() || grads.size() != m_.size())
    throw std::invalid_argument("adamw: parameter/gradient list size changed");
  ++t_;
  const double bc1 = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
  for (size_t i = 0; i < params.size(); ++i) {
    Tensor& value = params[i]->value;
    const Tensor& g = grads[i];
    Tensor& m = m_[i];
    Tensor& v = v_[i];
    check_same_shape(value, g, "adamw");
    for (int64_t j = 0; j < value.numel(); ++j) {
      const double gj = g[j];
      m[j] = config_.beta1 * m[j] + (1.0 - config_.beta1) * gj;
      v[j] = config_.beta2 * v[j] + (1.0 - config_.beta2) * gj * gj;
      const double m_hat = m[j] / bc1;
      const double v_hat = v[j] / bc2;
      value[j] -= config_.lr * (m_hat / (std::sqrt(v_hat) + config_.eps) +
                                config_.weight_decay * value[j]);
    }
  }
}

}  // namespace radalign::nn
