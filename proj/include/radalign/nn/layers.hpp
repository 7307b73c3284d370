#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "radalign/rng.hpp"
#include "radalign/tensor.hpp"

namespace radalign::nn {

// Named trainable tensor. Gradients are accumulated into caller-provided
// buffers (one per worker) rather than the Param itself, so backward passes
// can run per-sample in parallel and be reduced in a fixed order.
struct Param {
  std::string name;
  Tensor value;
};

// 3D convolution with cubic kernel, same-padding (kernel/2) and isotropic
// stride, implemented as im2col + GEMM. Weight layout: {out_ch, in_ch*k^3}.
struct Conv3d {
  int in_ch = 0, out_ch = 0, kernel = 3, stride = 1;
  Param weight, bias;

  Conv3d() = default;
  Conv3d(const std::string& name_prefix, int in_channels, int out_channels, int kernel_size,
         int stride_size);

  void init_he(Rng& rng);

  std::array<int64_t, 3> out_spatial(const std::array<int64_t, 3>& in) const;

  // x: {in_ch, X0, X1, X2} -> {out_ch, Y0, Y1, Y2}. When cols_out is given the
  // im2col matrix {Y, in_ch*k^3} is saved for the backward pass.
  Tensor forward(const Tensor& x, Tensor* cols_out = nullptr) const;

  // dy: gradient wrt output. Accumulates into d_weight/d_bias; returns dx when
  // need_dx (x_shape is the forward input shape).
  Tensor backward(const Tensor& dy, const Tensor& cols, const std::vector<int64_t>& x_shape,
                  Tensor& d_weight, Tensor& d_bias, bool need_dx = true) const;
};

// Affine map on flat vectors. Weight layout: {out, in}.
struct Linear {
  Param weight, bias;

  Linear() = default;
  Linear(const std::string& name_prefix, int in_dim, int out_dim);

  void init_glorot(Rng& rng);

  int in_dim() const { return static_cast<int>(weight.value.shape[1]); }
  int out_dim() const { return static_cast<int>(weight.value.shape[0]); }

  std::vector<double> forward(const std::vector<double>& x) const;
  // Accumulates d_weight/d_bias; returns dx.
  std::vector<double> backward(const std::vector<double>& x, const std::vector<double>& dy,
                               Tensor& d_weight, Tensor& d_bias) const;
};

// In-place ReLU; returns the activated tensor.
void relu_inplace(Tensor& x);
// dx = dy where y > 0 (y is the post-activation output).
Tensor relu_backward(const Tensor& dy, const Tensor& y);

// Per-channel mean over spatial positions: {c, s0, s1, s2} -> length-c vector.
std::vector<double> global_average_pool(const Tensor& feature_map);
Tensor global_average_pool_backward(const std::vector<double>& dz,
                                    const std::vector<int64_t>& feature_shape);

// Nearest-neighbor spatial upsampling by an integer factor.
Tensor upsample_nearest(const Tensor& x, int factor);
Tensor upsample_nearest_backward(const Tensor& dy, const std::vector<int64_t>& x_shape,
                                 int factor);

}  // namespace radalign::nn
