#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "radalign/nn/layers.hpp"

namespace radalign::nn {

// Inference contract for 3D image encoders: a volume {1, s0, s1, s2} maps to
// a feature map {c, s0/f0, s1/f1, s2/f2}, deterministic given weights.
class VisionEncoder {
 public:
  virtual ~VisionEncoder() = default;
  virtual int channels() const = 0;
  virtual std::array<int, 3> downsample_factors() const = 0;
  virtual Tensor encode(const Tensor& volume) const = 0;
};

struct EncoderConfig {
  int in_channels = 1;
  std::vector<int> channels{8, 16, 32};  // stem then one residual stage each
};

// Small residual 3D CNN: a strided stem convolution followed by one
// downsampling residual block per remaining stage. Every stage halves the
// spatial extent, so the downsample factor is 2^(#stages).
class ResNet3d final : public VisionEncoder {
 public:
  struct BlockCtx {
    std::vector<int64_t> x_shape;
    Tensor cols_a, a_post;  // conv_a columns and post-relu activation
    Tensor cols_b;
    Tensor cols_skip;
    Tensor out;  // post-relu block output
  };
  struct Ctx {
    std::vector<int64_t> x_shape;
    Tensor stem_cols, stem_out;
    std::vector<BlockCtx> blocks;
  };

  explicit ResNet3d(const EncoderConfig& config);

  void init(Rng& rng);
  void collect_params(std::vector<Param*>& out);
  std::vector<const Param*> params() const;

  int channels() const override { return config_.channels.back(); }
  std::array<int, 3> downsample_factors() const override;
  Tensor encode(const Tensor& volume) const override { return forward(volume, nullptr); }

  // ctx may be null for inference.
  Tensor forward(const Tensor& x, Ctx* ctx) const;
  // grads must be ordered as collect_params; returns dx (rarely needed).
  Tensor backward(const Tensor& d_feature, const Ctx& ctx, std::vector<Tensor>& grads,
                  bool need_dx = false) const;

  const EncoderConfig& config() const { return config_; }

 private:
  struct ResBlock {
    Conv3d conv_a, conv_b, skip;
  };
  EncoderConfig config_;
  Conv3d stem_;
  std::vector<ResBlock> blocks_;
};

// Linear classifier with sigmoid, Eq.-style p = sigmoid(W z + b).
struct ClassifierHead {
  Param weight;  // {C, c}
  Param bias;    // {C}

  ClassifierHead() = default;
  ClassifierHead(const std::string& name_prefix, int feature_dim, int num_classes);
  void init(Rng& rng);

  int num_classes() const { return static_cast<int>(weight.value.shape[0]); }
  int feature_dim() const { return static_cast<int>(weight.value.shape[1]); }

  // z: length-c feature vector -> per-class probabilities in (0,1).
  std::vector<double> classify(const std::vector<double>& z) const;
  // d_prob is dL/dp; accumulates weight/bias grads, returns dz.
  std::vector<double> backward(const std::vector<double>& z, const std::vector<double>& probs,
                               const std::vector<double>& d_prob, Tensor& d_weight,
                               Tensor& d_bias) const;
};

// Free-function form of the classification op.
std::vector<double> classify(const std::vector<double>& z, const ClassifierHead& head);

// One-block upsampling segmentation head on the final feature map:
// nearest x2 upsample then a 3^3 convolution to per-structure mask logits.
struct SegHead {
  int n_structures = 0;
  int up_factor = 2;
  Conv3d conv;

  SegHead() = default;
  SegHead(const std::string& name_prefix, int in_channels, int structures);
  void init(Rng& rng);

  struct Ctx {
    std::vector<int64_t> up_shape;
    Tensor cols;
    std::vector<int64_t> f_shape;
  };

  // Output spatial dims = feature dims * up_factor.
  std::array<int64_t, 3> out_spatial(const std::array<int64_t, 3>& feature_spatial) const;
  Tensor decode(const Tensor& feature_map, Ctx* ctx) const;
  // Returns d_feature.
  Tensor backward(const Tensor& d_logits, const Ctx& ctx, Tensor& d_weight,
                  Tensor& d_bias) const;
};

}  // namespace radalign::nn
