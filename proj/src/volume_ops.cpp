#include "radalign/volume_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "radalign/rng.hpp"

namespace radalign {

namespace {

int64_t round_half_up(double x) { return static_cast<int64_t>(std::floor(x + 0.5)); }

void require_not_normalized(const VolumeRecord& v, const char* op) {
  if (v.normalized)
    throw std::logic_error(std::string(op) + ": volume " + v.id + " is already normalized");
}

}  // namespace

VolumeRecord resample_volume(const VolumeRecord& v,
                             const std::array<double, 3>& target_spacing_mm) {
  v.validate();
  require_not_normalized(v, "resample_volume");
  for (double s : target_spacing_mm)
    if (!(s > 0.0)) throw std::invalid_argument("resample_volume: non-positive target spacing");

  const auto& in_shape = v.voxels.shape;
  std::array<int64_t, 3> out_shape;
  std::array<double, 3> scale;  // output index -> input index stretch factor
  for (size_t a = 0; a < 3; ++a) {
    out_shape[a] = std::max<int64_t>(
        1, round_half_up(static_cast<double>(in_shape[a]) * v.spacing_mm[a] / target_spacing_mm[a]));
    scale[a] = target_spacing_mm[a] / v.spacing_mm[a];
  }

  VolumeRecord out;
  out.id = v.id;
  out.spacing_mm = target_spacing_mm;
  out.normalized = false;
  out.voxels = Tensor({out_shape[0], out_shape[1], out_shape[2]});

  const int64_t n0 = in_shape[0], n1 = in_shape[1], n2 = in_shape[2];
  auto prepare_axis = [](int64_t out_n, double sc, int64_t in_n, std::vector<int64_t>& lo,
                         std::vector<double>& frac) {
    lo.resize(static_cast<size_t>(out_n));
    frac.resize(static_cast<size_t>(out_n));
    for (int64_t i = 0; i < out_n; ++i) {
      double x = (static_cast<double>(i) + 0.5) * sc - 0.5;
      x = std::clamp(x, 0.0, static_cast<double>(in_n - 1));
      const int64_t f = std::min(static_cast<int64_t>(std::floor(x)), in_n - 1);
      lo[static_cast<size_t>(i)] = f;
      frac[static_cast<size_t>(i)] = x - static_cast<double>(f);
    }
  };
  std::vector<int64_t> lo0, lo1, lo2;
  std::vector<double> f0, f1, f2;
  prepare_axis(out_shape[0], scale[0], n0, lo0, f0);
  prepare_axis(out_shape[1], scale[1], n1, lo1, f1);
  prepare_axis(out_shape[2], scale[2], n2, lo2, f2);

  const auto& src = v.voxels;
  for (int64_t i = 0; i < out_shape[0]; ++i) {
    const int64_t a0 = lo0[static_cast<size_t>(i)];
    const int64_t b0 = std::min(a0 + 1, n0 - 1);
    const double t0 = f0[static_cast<size_t>(i)];
    for (int64_t j = 0; j < out_shape[1]; ++j) {
      const int64_t a1 = lo1[static_cast<size_t>(j)];
      const int64_t b1 = std::min(a1 + 1, n1 - 1);
      const double t1 = f1[static_cast<size_t>(j)];
      for (int64_t k = 0; k < out_shape[2]; ++k) {
        const int64_t a2 = lo2[static_cast<size_t>(k)];
        const int64_t b2 = std::min(a2 + 1, n2 - 1);
        const double t2 = f2[static_cast<size_t>(k)];
        const double c000 = src.at3(a0, a1, a2), c001 = src.at3(a0, a1, b2);
        const double c010 = src.at3(a0, b1, a2), c011 = src.at3(a0, b1, b2);
        const double c100 = src.at3(b0, a1, a2), c101 = src.at3(b0, a1, b2);
        const double c110 = src.at3(b0, b1, a2), c111 = src.at3(b0, b1, b2);
        const double c00 = c000 + (c001 - c000) * t2;
        const double c01 = c010 + (c011 - c010) * t2;
        const double c10 = c100 + (c101 - c100) * t2;
        const double c11 = c110 + (c111 - c110) * t2;
        const double c0 = c00 + (c01 - c00) * t1;
        const double c1 = c10 + (c11 - c10) * t1;
        out.voxels.at3(i, j, k) = c0 + (c1 - c0) * t0;
      }
    }
  }
  return out;
}

VolumeRecord clip_and_normalize(const VolumeRecord& v) {
  v.validate();
  require_not_normalized(v, "clip_and_normalize");
  VolumeRecord out = v;
  for (double& x : out.voxels.data) {
    const double c = std::clamp(x, -1000.0, 200.0);
    x = 2.0 * (c + 1000.0) / 1200.0 - 1.0;
  }
  out.normalized = true;
  return out;
}

VolumeRecord pad_or_crop(const VolumeRecord& v, const std::array<int64_t, 3>& target_shape) {
  v.validate();
  if (!v.normalized)
    throw std::logic_error("pad_or_crop: volume " + v.id + " must be normalized first");
  for (int64_t d : target_shape)
    if (d <= 0) throw std::invalid_argument("pad_or_crop: non-positive target dimension");

  if (v.voxels.shape[0] == target_shape[0] && v.voxels.shape[1] == target_shape[1] &&
      v.voxels.shape[2] == target_shape[2])
    return v;

  // For each axis: src window start within the input, dst start within the
  // output. Crop keeps the centered window (extra voxel trimmed high); pad
  // centers the content (extra voxel added high).
  std::array<int64_t, 3> src_start, dst_start, copy_len;
  for (size_t a = 0; a < 3; ++a) {
    const int64_t in_n = v.voxels.shape[a], out_n = target_shape[a];
    if (in_n >= out_n) {
      src_start[a] = (in_n - out_n) / 2;
      dst_start[a] = 0;
      copy_len[a] = out_n;
    } else {
      src_start[a] = 0;
      dst_start[a] = (out_n - in_n) / 2;
      copy_len[a] = in_n;
    }
  }

  VolumeRecord out;
  out.id = v.id;
  out.spacing_mm = v.spacing_mm;
  out.normalized = true;
  out.voxels = Tensor::full({target_shape[0], target_shape[1], target_shape[2]}, -1.0);
  for (int64_t i = 0; i < copy_len[0]; ++i)
    for (int64_t j = 0; j < copy_len[1]; ++j)
      for (int64_t k = 0; k < copy_len[2]; ++k)
        out.voxels.at3(dst_start[0] + i, dst_start[1] + j, dst_start[2] + k) =
            v.voxels.at3(src_start[0] + i, src_start[1] + j, src_start[2] + k);
  return out;
}

std::array<int64_t, 3> crop_offsets(const std::array<int64_t, 3>& shape,
                                    const std::array<int64_t, 3>& target_shape,
                                    CropMode mode, uint64_t rng_seed) {
  for (size_t a = 0; a < 3; ++a) {
    if (target_shape[a] <= 0)
      throw std::invalid_argument("crop: non-positive target dimension");
    if (target_shape[a] > shape[a])
      throw std::invalid_argument("crop: target exceeds input shape on axis " +
                                  std::to_string(a));
  }
  std::array<int64_t, 3> off;
  if (mode == CropMode::center) {
    for (size_t a = 0; a < 3; ++a) off[a] = (shape[a] - target_shape[a]) / 2;
  } else {
    Rng rng(rng_seed);
    for (size_t a = 0; a < 3; ++a) off[a] = rng.uniform_int(0, shape[a] - target_shape[a]);
  }
  return off;
}

VolumeRecord crop_at(const VolumeRecord& v, const std::array<int64_t, 3>& offsets,
                     const std::array<int64_t, 3>& target_shape) {
  for (size_t a = 0; a < 3; ++a)
    if (offsets[a] < 0 || offsets[a] + target_shape[a] > v.voxels.shape[a])
      throw std::invalid_argument("crop_at: window out of bounds on axis " + std::to_string(a));
  VolumeRecord out;
  out.id = v.id;
  out.spacing_mm = v.spacing_mm;
  out.normalized = v.normalized;
  out.voxels = Tensor({target_shape[0], target_shape[1], target_shape[2]});
  for (int64_t i = 0; i < target_shape[0]; ++i)
    for (int64_t j = 0; j < target_shape[1]; ++j)
      for (int64_t k = 0; k < target_shape[2]; ++k)
        out.voxels.at3(i, j, k) =
            v.voxels.at3(offsets[0] + i, offsets[1] + j, offsets[2] + k);
  return out;
}

VolumeRecord crop_for_training(const VolumeRecord& v,
                               const std::array<int64_t, 3>& target_shape, CropMode mode,
                               uint64_t rng_seed) {
  v.validate();
  const std::array<int64_t, 3> shape{v.voxels.shape[0], v.voxels.shape[1], v.voxels.shape[2]};
  return crop_at(v, crop_offsets(shape, target_shape, mode, rng_seed), target_shape);
}

}  // namespace radalign
