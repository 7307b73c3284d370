#include "radalign/nn/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radalign::nn {

namespace {
constexpr double kProbClamp = 1e-7;
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double bce_loss(const Tensor& p, const Tensor& y, Reduction reduction, Tensor* dp) {
  check_same_shape(p, y, "bce_loss");
  if (p.numel() == 0) throw std::invalid_argument("bce_loss: empty input");
  for (double t : y.data)
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("bce_loss: target outside [0,1]");

  const double scale =
      reduction == Reduction::mean ? 1.0 / static_cast<double>(p.numel()) : 1.0;
  if (dp) *dp = Tensor(p.shape);
  double loss = 0.0;
  for (int64_t i = 0; i < p.numel(); ++i) {
    const double raw = p[i];
    const double ph = std::clamp(raw, kProbClamp, 1.0 - kProbClamp);
    const double t = y[i];
    loss -= t * std::log(ph) + (1.0 - t) * std::log(1.0 - ph);
    if (dp) {
      const bool clamped = raw < kProbClamp || raw > 1.0 - kProbClamp;
      (*dp)[i] = clamped ? 0.0 : scale * (ph - t) / (ph * (1.0 - ph));
    }
  }
  return loss * scale;
}

Tensor smooth_labels(const Tensor& y, double epsilon) {
  if (epsilon < 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("smooth_labels: epsilon must be in [0,1)");
  for (double t : y.data)
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("smooth_labels: target outside [0,1]");
  Tensor out = y;
  for (double& t : out.data) t = t * (1.0 - epsilon) + epsilon / 2.0;
  return out;
}

double aux_seg_loss(const Tensor& mask_logits, const Tensor& masks, Tensor* d_logits) {
  check_same_shape(mask_logits, masks, "aux_seg_loss");
  if (mask_logits.numel() == 0) throw std::invalid_argument("aux_seg_loss: empty input");
  for (double m : masks.data)
    if (m != 0.0 && m != 1.0) throw std::invalid_argument("aux_seg_loss: mask value not in {0,1}");

  const double scale = 1.0 / static_cast<double>(mask_logits.numel());
  if (d_logits) *d_logits = Tensor(mask_logits.shape);
  double loss = 0.0;
  for (int64_t i = 0; i < mask_logits.numel(); ++i) {
    const double x = mask_logits[i];
    const double m = masks[i];
    // max(x,0) - x*m + log(1 + exp(-|x|))
    loss += std::max(x, 0.0) - x * m + std::log1p(std::exp(-std::abs(x)));
    if (d_logits) (*d_logits)[i] = scale * (sigmoid(x) - m);
  }
  return loss * scale;
}

Tensor similarity_matrix(const Tensor& Z, const Tensor& T, bool l2_normalize) {
  if (Z.rank() != 2 || T.rank() != 2)
    throw std::invalid_argument("similarity_matrix: expected {N,d} matrices");
  if (Z.shape != T.shape)
    throw std::invalid_argument("similarity_matrix: shape mismatch " + Z.shape_str() + " vs " +
                                T.shape_str());
  const int64_t n = Z.shape[0], d = Z.shape[1];

  auto normalized_rows = [&](const Tensor& m, const char* side) {
    Tensor out = m;
    for (int64_t i = 0; i < n; ++i) {
      double* row = out.data.data() + i * d;
      double norm2 = 0.0;
      for (int64_t j = 0; j < d; ++j) norm2 += row[j] * row[j];
      if (norm2 == 0.0)
        throw std::invalid_argument(std::string("similarity_matrix: zero-norm ") + side +
                                    " row " + std::to_string(i));
      const double inv = 1.0 / std::sqrt(norm2);
      for (int64_t j = 0; j < d; ++j) row[j] *= inv;
    }
    return out;
  };

  Tensor z_norm, t_norm;
  const Tensor* zp = &Z;
  const Tensor* tp = &T;
  if (l2_normalize) {
    z_norm = normalized_rows(Z, "image");
    t_norm = normalized_rows(T, "text");
    zp = &z_norm;
    tp = &t_norm;
  }

  Tensor s({n, n});
  const Tensor& zz = *zp;
  const Tensor& tt = *tp;
  for (int64_t i = 0; i < n; ++i) {
    const double* zi = zz.data.data() + i * d;
    for (int64_t j = 0; j < n; ++j) {
      const double* tj = tt.data.data() + j * d;
      double acc = 0.0;
      for (int64_t k = 0; k < d; ++k) acc += zi[k] * tj[k];
      s.data[static_cast<size_t>(i * n + j)] = acc;
    }
  }
  return s;
}

double clip_loss(const Tensor& S, double coefficient, Tensor* dS) {
  if (S.rank() != 2 || S.shape[0] != S.shape[1])
    throw std::invalid_argument("clip_loss: similarity matrix must be square");
  if (!(coefficient > 0.0)) throw std::invalid_argument("clip_loss: coefficient must be > 0");
  const int64_t n = S.shape[0];
  for (double v : S.data)
    if (!std::isfinite(v)) throw std::invalid_argument("clip_loss: non-finite similarity");

  // Row softmax P and column softmax Q, max-subtracted.
  Tensor p({n, n}), q({n, n});
  double loss = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    const double* row = S.data.data() + i * n;
    double mx = row[0];
    for (int64_t j = 1; j < n; ++j) mx = std::max(mx, row[j]);
    double denom = 0.0;
    for (int64_t j = 0; j < n; ++j) denom += std::exp(row[j] - mx);
    for (int64_t j = 0; j < n; ++j)
      p.data[static_cast<size_t>(i * n + j)] = std::exp(row[j] - mx) / denom;
    loss -= (row[i] - mx) - std::log(denom);
  }
  for (int64_t j = 0; j < n; ++j) {
    double mx = S.data[static_cast<size_t>(j)];
    for (int64_t i = 1; i < n; ++i)
      mx = std::max(mx, S.data[static_cast<size_t>(i * n + j)]);
    double denom = 0.0;
    for (int64_t i = 0; i < n; ++i)
      denom += std::exp(S.data[static_cast<size_t>(i * n + j)] - mx);
    for (int64_t i = 0; i < n; ++i)
      q.data[static_cast<size_t>(i * n + j)] =
          std::exp(S.data[static_cast<size_t>(i * n + j)] - mx) / denom;
    loss -= (S.data[static_cast<size_t>(j * n + j)] - mx) - std::log(denom);
  }
  loss *= coefficient / (2.0 * static_cast<double>(n));

  if (dS) {
    *dS = Tensor({n, n});
    const double scale = coefficient / (2.0 * static_cast<double>(n));
    for (int64_t i = 0; i < n; ++i)
      for (int64_t j = 0; j < n; ++j) {
        const double delta = i == j ? 2.0 : 0.0;
        (*dS)[i * n + j] = scale * (p[i * n + j] + q[i * n + j] - delta);
      }
  }
  return loss;
}

}  // namespace radalign::nn
