#include "radalign/nn/encoder.hpp"

#include <cmath>
#include <stdexcept>

#include "radalign/nn/losses.hpp"

namespace radalign::nn {

ResNet3d::ResNet3d(const EncoderConfig& config) : config_(config) {
  if (config_.channels.empty())
    throw std::invalid_argument("encoder: needs at least one stage");
  stem_ = Conv3d("encoder.stem", config_.in_channels, config_.channels[0], 3, 2);
  for (size_t i = 1; i < config_.channels.size(); ++i) {
    const std::string prefix = "encoder.block" + std::to_string(i - 1);
    ResBlock b;
    b.conv_a = Conv3d(prefix + ".conv_a", config_.channels[i - 1], config_.channels[i], 3, 2);
    b.conv_b = Conv3d(prefix + ".conv_b", config_.channels[i], config_.channels[i], 3, 1);
    b.skip = Conv3d(prefix + ".skip", config_.channels[i - 1], config_.channels[i], 1, 2);
    blocks_.push_back(std::move(b));
  }
}

void ResNet3d::init(Rng& rng) {
  Rng r = rng.fork("encoder-init");
  stem_.init_he(r);
  for (auto& b : blocks_) {
    b.conv_a.init_he(r);
    b.conv_b.init_he(r);
    b.skip.init_he(r);
  }
}

void ResNet3d::collect_params(std::vector<Param*>& out) {
  out.push_back(&stem_.weight);
  out.push_back(&stem_.bias);
  for (auto& b : blocks_) {
    out.push_back(&b.conv_a.weight);
    out.push_back(&b.conv_a.bias);
    out.push_back(&b.conv_b.weight);
    out.push_back(&b.conv_b.bias);
    out.push_back(&b.skip.weight);
    out.push_back(&b.skip.bias);
  }
}

std::vector<const Param*> ResNet3d::params() const {
  std::vector<Param*> mut;
  const_cast<ResNet3d*>(this)->collect_params(mut);
  return {mut.begin(), mut.end()};
}

std::array<int, 3> ResNet3d::downsample_factors() const {
  const int f = 1 << static_cast<int>(config_.channels.size());
  return {f, f, f};
}

Tensor ResNet3d::forward(const Tensor& x, Ctx* ctx) const {
  if (ctx) {
    ctx->x_shape = x.shape;
    ctx->blocks.assign(blocks_.size(), BlockCtx{});
  }
  Tensor cur = stem_.forward(x, ctx ? &ctx->stem_cols : nullptr);
  relu_inplace(cur);
  if (ctx) ctx->stem_out = cur;

  for (size_t i = 0; i < blocks_.size(); ++i) {
    const ResBlock& b = blocks_[i];
    BlockCtx* bc = ctx ? &ctx->blocks[i] : nullptr;
    if (bc) bc->x_shape = cur.shape;

    Tensor a = b.conv_a.forward(cur, bc ? &bc->cols_a : nullptr);
    relu_inplace(a);
    if (bc) bc->a_post = a;

    Tensor main = b.conv_b.forward(a, bc ? &bc->cols_b : nullptr);
    Tensor shortcut = b.skip.forward(cur, bc ? &bc->cols_skip : nullptr);
    check_same_shape(main, shortcut, "resblock");
    for (int64_t j = 0; j < main.numel(); ++j) main[j] += shortcut[j];
    relu_inplace(main);
    if (bc) bc->out = main;
    cur = std::move(main);
  }
  return cur;
}

Tensor ResNet3d::backward(const Tensor& d_feature, const Ctx& ctx, std::vector<Tensor>& grads,
                          bool need_dx) const {
  // grads layout mirrors collect_params: stem then per-block (a, b, skip).
  const size_t per_block = 6;
  auto block_grad = [&](size_t block, size_t off) -> Tensor& {
    return grads[2 + block * per_block + off];
  };

  Tensor d_cur = d_feature;
  for (size_t ri = blocks_.size(); ri-- > 0;) {
    const ResBlock& b = blocks_[ri];
    const BlockCtx& bc = ctx.blocks[ri];
    Tensor d_sum = relu_backward(d_cur, bc.out);
    // main branch
    Tensor d_a_post = b.conv_b.backward(d_sum, bc.cols_b, bc.a_post.shape, block_grad(ri, 2),
                                        block_grad(ri, 3), true);
    Tensor d_a_pre = relu_backward(d_a_post, bc.a_post);
    Tensor dx_main = b.conv_a.backward(d_a_pre, bc.cols_a, bc.x_shape, block_grad(ri, 0),
                                       block_grad(ri, 1), true);
    // shortcut
    Tensor dx_skip = b.skip.backward(d_sum, bc.cols_skip, bc.x_shape, block_grad(ri, 4),
                                     block_grad(ri, 5), true);
    for (int64_t j = 0; j < dx_main.numel(); ++j) dx_main[j] += dx_skip[j];
    d_cur = std::move(dx_main);
  }

  Tensor d_stem_pre = relu_backward(d_cur, ctx.stem_out);
  return stem_.backward(d_stem_pre, ctx.stem_cols, ctx.x_shape, grads[0], grads[1], need_dx);
}

ClassifierHead::ClassifierHead(const std::string& name_prefix, int feature_dim,
                               int num_classes) {
  weight.name = name_prefix + ".weight";
  weight.value = Tensor({num_classes, feature_dim});
  bias.name = name_prefix + ".bias";
  bias.value = Tensor({num_classes});
}

void ClassifierHead::init(Rng& rng) {
  Rng r = rng.fork("head-init");
  const double limit =
      std::sqrt(6.0 / static_cast<double>(weight.value.shape[0] + weight.value.shape[1]));
  for (double& w : weight.value.data) w = r.uniform(-limit, limit);
  bias.value.fill(0.0);
}

std::vector<double> ClassifierHead::classify(const std::vector<double>& z) const {
  const int64_t C = weight.value.shape[0], c = weight.value.shape[1];
  if (static_cast<int64_t>(z.size()) != c)
    throw std::invalid_argument("classify: feature dim " + std::to_string(z.size()) +
                                " != " + std::to_string(c));
  std::vector<double> p(static_cast<size_t>(C));
  for (int64_t o = 0; o < C; ++o) {
    const double* w = weight.value.data.data() + o * c;
    double logit = bias.value.data[static_cast<size_t>(o)];
    for (int64_t i = 0; i < c; ++i) logit += w[i] * z[static_cast<size_t>(i)];
    p[static_cast<size_t>(o)] = sigmoid(logit);
  }
  return p;
}

std::vector<double> ClassifierHead::backward(const std::vector<double>& z,
                                             const std::vector<double>& probs,
                                             const std::vector<double>& d_prob,
                                             Tensor& d_weight, Tensor& d_bias) const {
  const int64_t C = weight.value.shape[0], c = weight.value.shape[1];
  std::vector<double> dz(static_cast<size_t>(c), 0.0);
  for (int64_t o = 0; o < C; ++o) {
    const double p = probs[static_cast<size_t>(o)];
    const double d_logit = d_prob[static_cast<size_t>(o)] * p * (1.0 - p);
    d_bias.data[static_cast<size_t>(o)] += d_logit;
    const double* w = weight.value.data.data() + o * c;
    double* dw = d_weight.data.data() + o * c;
    for (int64_t i = 0; i < c; ++i) {
      dw[i] += d_logit * z[static_cast<size_t>(i)];
      dz[static_cast<size_t>(i)] += d_logit * w[i];
    }
  }
  return dz;
}

std::vector<double> classify(const std::vector<double>& z, const ClassifierHead& head) {
  return head.classify(z);
}

SegHead::SegHead(const std::string& name_prefix, int in_channels, int structures)
    : n_structures(structures), conv(name_prefix + ".conv", in_channels, structures, 3, 1) {}

void SegHead::init(Rng& rng) {
  Rng r = rng.fork("seg-init");
  conv.init_he(r);
}

std::array<int64_t, 3> SegHead::out_spatial(const std::array<int64_t, 3>& feature_spatial) const {
  return {feature_spatial[0] * up_factor, feature_spatial[1] * up_factor,
          feature_spatial[2] * up_factor};
}

Tensor SegHead::decode(const Tensor& feature_map, Ctx* ctx) const {
  Tensor up = upsample_nearest(feature_map, up_factor);
  if (ctx) {
    ctx->f_shape = feature_map.shape;
    ctx->up_shape = up.shape;
  }
  return conv.forward(up, ctx ? &ctx->cols : nullptr);
}

Tensor SegHead::backward(const Tensor& d_logits, const Ctx& ctx, Tensor& d_weight,
                         Tensor& d_bias) const {
  Tensor d_up = conv.backward(d_logits, ctx.cols, ctx.up_shape, d_weight, d_bias, true);
  return upsample_nearest_backward(d_up, ctx.f_shape, up_factor);
}

}  // namespace radalign::nn
