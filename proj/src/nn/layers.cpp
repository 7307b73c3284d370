#include "radalign/nn/layers.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace radalign::nn {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat>;
using ConstMapMat = Eigen::Map<const RowMat>;

Conv3d::Conv3d(const std::string& name_prefix, int in_channels, int out_channels,
               int kernel_size, int stride_size)
    : in_ch(in_channels), out_ch(out_channels), kernel(kernel_size), stride(stride_size) {
  const int64_t fan_in = static_cast<int64_t>(in_ch) * kernel * kernel * kernel;
  weight.name = name_prefix + ".weight";
  weight.value = Tensor({out_ch, fan_in});
  bias.name = name_prefix + ".bias";
  bias.value = Tensor({out_ch});
}

void Conv3d::init_he(Rng& rng) {
  const double fan_in = static_cast<double>(weight.value.shape[1]);
  const double stddev = std::sqrt(2.0 / fan_in);
  for (double& w : weight.value.data) w = rng.normal(0.0, stddev);
  bias.value.fill(0.0);
}

std::array<int64_t, 3> Conv3d::out_spatial(const std::array<int64_t, 3>& in) const {
  const int64_t pad = kernel / 2;
  std::array<int64_t, 3> out;
  for (size_t a = 0; a < 3; ++a) out[a] = (in[a] + 2 * pad - kernel) / stride + 1;
  return out;
}

namespace {

// Gathers receptive fields into rows: cols is {Y0*Y1*Y2, in_ch*k^3} with the
// field flattened in (cin, dz0, dz1, dz2) order. Out-of-range taps read 0.
void im2col(const Tensor& x, int kernel, int stride, const std::array<int64_t, 3>& out_sp,
            Tensor& cols) {
  const int64_t in_ch = x.shape[0];
  const int64_t X0 = x.shape[1], X1 = x.shape[2], X2 = x.shape[3];
  const int64_t pad = kernel / 2;
  const int64_t patch = in_ch * kernel * kernel * kernel;
  const int64_t rows = out_sp[0] * out_sp[1] * out_sp[2];
  cols = Tensor({rows, patch});

  int64_t row = 0;
  for (int64_t y0 = 0; y0 < out_sp[0]; ++y0) {
    const int64_t b0 = y0 * stride - pad;
    for (int64_t y1 = 0; y1 < out_sp[1]; ++y1) {
      const int64_t b1 = y1 * stride - pad;
      for (int64_t y2 = 0; y2 < out_sp[2]; ++y2, ++row) {
        const int64_t b2 = y2 * stride - pad;
        double* dst = cols.data.data() + row * patch;
        for (int64_t c = 0; c < in_ch; ++c) {
          const double* src_c = x.data.data() + c * X0 * X1 * X2;
          for (int64_t d0 = 0; d0 < kernel; ++d0) {
            const int64_t i0 = b0 + d0;
            for (int64_t d1 = 0; d1 < kernel; ++d1) {
              const int64_t i1 = b1 + d1;
              for (int64_t d2 = 0; d2 < kernel; ++d2, ++dst) {
                const int64_t i2 = b2 + d2;
                *dst = (i0 >= 0 && i0 < X0 && i1 >= 0 && i1 < X1 && i2 >= 0 && i2 < X2)
                           ? src_c[(i0 * X1 + i1) * X2 + i2]
                           : 0.0;
              }
            }
          }
        }
      }
    }
  }
}

// Scatter-adds column gradients back onto the input grid.
void col2im(const Tensor& dcols, int kernel, int stride, const std::array<int64_t, 3>& out_sp,
            Tensor& dx) {
  const int64_t in_ch = dx.shape[0];
  const int64_t X0 = dx.shape[1], X1 = dx.shape[2], X2 = dx.shape[3];
  const int64_t pad = kernel / 2;
  const int64_t patch = in_ch * kernel * kernel * kernel;

  int64_t row = 0;
  for (int64_t y0 = 0; y0 < out_sp[0]; ++y0) {
    const int64_t b0 = y0 * stride - pad;
    for (int64_t y1 = 0; y1 < out_sp[1]; ++y1) {
      const int64_t b1 = y1 * stride - pad;
      for (int64_t y2 = 0; y2 < out_sp[2]; ++y2, ++row) {
        const int64_t b2 = y2 * stride - pad;
        const double* src = dcols.data.data() + row * patch;
        for (int64_t c = 0; c < in_ch; ++c) {
          double* dst_c = dx.data.data() + c * X0 * X1 * X2;
          for (int64_t d0 = 0; d0 < kernel; ++d0) {
            const int64_t i0 = b0 + d0;
            for (int64_t d1 = 0; d1 < kernel; ++d1) {
              const int64_t i1 = b1 + d1;
              for (int64_t d2 = 0; d2 < kernel; ++d2, ++src) {
                const int64_t i2 = b2 + d2;
                if (i0 >= 0 && i0 < X0 && i1 >= 0 && i1 < X1 && i2 >= 0 && i2 < X2)
                  dst_c[(i0 * X1 + i1) * X2 + i2] += *src;
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace

Tensor Conv3d::forward(const Tensor& x, Tensor* cols_out) const {
  if (x.rank() != 4 || x.shape[0] != in_ch)
    throw std::invalid_argument("conv3d: expected input {" + std::to_string(in_ch) +
                                ", s0, s1, s2}, got " + x.shape_str());
  const std::array<int64_t, 3> in_sp{x.shape[1], x.shape[2], x.shape[3]};
  const auto out_sp = out_spatial(in_sp);
  Tensor local_cols;
  Tensor& cols = cols_out ? *cols_out : local_cols;
  im2col(x, kernel, stride, out_sp, cols);

  const int64_t rows = cols.shape[0];
  const int64_t patch = cols.shape[1];
  Tensor y({out_ch, out_sp[0], out_sp[1], out_sp[2]});
  // y_mat {out_ch, rows} = W {out_ch, patch} * cols^T {patch, rows}
  ConstMapMat w(weight.value.data.data(), out_ch, patch);
  ConstMapMat c(cols.data.data(), rows, patch);
  MapMat out(y.data.data(), out_ch, rows);
  out.noalias() = w * c.transpose();
  for (int64_t o = 0; o < out_ch; ++o)
    out.row(o).array() += bias.value.data[static_cast<size_t>(o)];
  return y;
}

Tensor Conv3d::backward(const Tensor& dy, const Tensor& cols, const std::vector<int64_t>& x_shape,
                        Tensor& d_weight, Tensor& d_bias, bool need_dx) const {
  const int64_t rows = cols.shape[0];
  const int64_t patch = cols.shape[1];
  if (dy.shape[0] != out_ch || dy.numel() != out_ch * rows)
    throw std::invalid_argument("conv3d backward: gradient shape mismatch");

  ConstMapMat g(dy.data.data(), out_ch, rows);
  ConstMapMat c(cols.data.data(), rows, patch);
  MapMat dw(d_weight.data.data(), out_ch, patch);
  dw.noalias() += g * c;
  for (int64_t o = 0; o < out_ch; ++o) d_bias.data[static_cast<size_t>(o)] += g.row(o).sum();

  if (!need_dx) return Tensor();
  Tensor dcols({rows, patch});
  MapMat dc(dcols.data.data(), rows, patch);
  ConstMapMat w(weight.value.data.data(), out_ch, patch);
  dc.noalias() = g.transpose() * w;
  Tensor dx(x_shape);
  const std::array<int64_t, 3> in_sp{x_shape[1], x_shape[2], x_shape[3]};
  col2im(dcols, kernel, stride, out_spatial(in_sp), dx);
  return dx;
}

Linear::Linear(const std::string& name_prefix, int in_dim, int out_dim) {
  weight.name = name_prefix + ".weight";
  weight.value = Tensor({out_dim, in_dim});
  bias.name = name_prefix + ".bias";
  bias.value = Tensor({out_dim});
}

void Linear::init_glorot(Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(weight.value.shape[0] +
                                                           weight.value.shape[1]));
  for (double& w : weight.value.data) w = rng.uniform(-limit, limit);
  bias.value.fill(0.0);
}

std::vector<double> Linear::forward(const std::vector<double>& x) const {
  const int64_t out_n = weight.value.shape[0], in_n = weight.value.shape[1];
  if (static_cast<int64_t>(x.size()) != in_n)
    throw std::invalid_argument("linear: input dim " + std::to_string(x.size()) +
                                " != " + std::to_string(in_n));
  std::vector<double> y(static_cast<size_t>(out_n));
  for (int64_t o = 0; o < out_n; ++o) {
    const double* w = weight.value.data.data() + o * in_n;
    double acc = bias.value.data[static_cast<size_t>(o)];
    for (int64_t i = 0; i < in_n; ++i) acc += w[i] * x[static_cast<size_t>(i)];
    y[static_cast<size_t>(o)] = acc;
  }
  return y;
}

std::vector<double> Linear::backward(const std::vector<double>& x, const std::vector<double>& dy,
                                     Tensor& d_weight, Tensor& d_bias) const {
  const int64_t out_n = weight.value.shape[0], in_n = weight.value.shape[1];
  std::vector<double> dx(static_cast<size_t>(in_n), 0.0);
  for (int64_t o = 0; o < out_n; ++o) {
    const double g = dy[static_cast<size_t>(o)];
    d_bias.data[static_cast<size_t>(o)] += g;
    const double* w = weight.value.data.data() + o * in_n;
    double* dw = d_weight.data.data() + o * in_n;
    for (int64_t i = 0; i < in_n; ++i) {
      dw[i] += g * x[static_cast<size_t>(i)];
      dx[static_cast<size_t>(i)] += g * w[i];
    }
  }
  return dx;
}

void relu_inplace(Tensor& x) {
  for (double& v : x.data)
    if (v < 0.0) v = 0.0;
}

Tensor relu_backward(const Tensor& dy, const Tensor& y) {
  check_same_shape(dy, y, "relu_backward");
  Tensor dx = dy;
  for (size_t i = 0; i < dx.data.size(); ++i)
    if (y.data[i] <= 0.0) dx.data[i] = 0.0;
  return dx;
}

std::vector<double> global_average_pool(const Tensor& feature_map) {
  if (feature_map.rank() != 4)
    throw std::invalid_argument("global_average_pool: expected {c, s0, s1, s2}");
  const int64_t c = feature_map.shape[0];
  const int64_t spatial = feature_map.numel() / c;
  if (spatial <= 0) throw std::invalid_argument("global_average_pool: empty spatial extent");
  std::vector<double> z(static_cast<size_t>(c), 0.0);
  for (int64_t ch = 0; ch < c; ++ch) {
    const double* p = feature_map.data.data() + ch * spatial;
    double acc = 0.0;
    for (int64_t i = 0; i < spatial; ++i) acc += p[i];
    z[static_cast<size_t>(ch)] = acc / static_cast<double>(spatial);
  }
  return z;
}

Tensor global_average_pool_backward(const std::vector<double>& dz,
                                    const std::vector<int64_t>& feature_shape) {
  Tensor dx(feature_shape);
  const int64_t c = feature_shape[0];
  const int64_t spatial = dx.numel() / c;
  for (int64_t ch = 0; ch < c; ++ch) {
    const double g = dz[static_cast<size_t>(ch)] / static_cast<double>(spatial);
    double* p = dx.data.data() + ch * spatial;
    for (int64_t i = 0; i < spatial; ++i) p[i] = g;
  }
  return dx;
}

Tensor upsample_nearest(const Tensor& x, int factor) {
  const int64_t c = x.shape[0], s0 = x.shape[1], s1 = x.shape[2], s2 = x.shape[3];
  Tensor y({c, s0 * factor, s1 * factor, s2 * factor});
  for (int64_t ch = 0; ch < c; ++ch)
    for (int64_t i = 0; i < s0 * factor; ++i)
      for (int64_t j = 0; j < s1 * factor; ++j)
        for (int64_t k = 0; k < s2 * factor; ++k)
          y.data[((ch * s0 * factor + i) * s1 * factor + j) * s2 * factor + k] =
              x.data[((ch * s0 + i / factor) * s1 + j / factor) * s2 + k / factor];
  return y;
}

Tensor upsample_nearest_backward(const Tensor& dy, const std::vector<int64_t>& x_shape,
                                 int factor) {
  Tensor dx(x_shape);
  const int64_t c = x_shape[0], s0 = x_shape[1], s1 = x_shape[2], s2 = x_shape[3];
  for (int64_t ch = 0; ch < c; ++ch)
    for (int64_t i = 0; i < s0 * factor; ++i)
      for (int64_t j = 0; j < s1 * factor; ++j)
        for (int64_t k = 0; k < s2 * factor; ++k)
          dx.data[((ch * s0 + i / factor) * s1 + j / factor) * s2 + k / factor] +=
              dy.data[((ch * s0 * factor + i) * s1 * factor + j) * s2 * factor + k];
  return dx;
}

}  // namespace radalign::nn
