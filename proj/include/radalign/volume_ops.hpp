#pragma once

#include <array>
#include <cstdint>

#include "radalign/volume.hpp"

namespace radalign {

// Preprocessing chain, order-enforced via the normalized flag:
//   resample -> clip_and_normalize -> pad_or_crop -> crop_for_training.

// Trilinear resampling to a target spacing. New extent per axis is
// round(old_extent * old_spacing / new_spacing), minimum 1. Output voxel
// centers map to input coordinates half-pixel style; out-of-range coordinates
// clamp to the edge sample.
VolumeRecord resample_volume(const VolumeRecord& v,
                             const std::array<double, 3>& target_spacing_mm);

// Clips to [-1000, 200] HU and maps affinely onto [-1, 1]. Applying this to an
// already-normalized volume is a state error.
VolumeRecord clip_and_normalize(const VolumeRecord& v);

// Center-crops oversize axes and symmetrically pads undersize axes with the
// normalized background value (-1). Odd remainders go to the high-index side.
VolumeRecord pad_or_crop(const VolumeRecord& v, const std::array<int64_t, 3>& target_shape);

enum class CropMode { random, center };

// Window start offsets for a crop; pure function of (shape, target, mode, seed).
std::array<int64_t, 3> crop_offsets(const std::array<int64_t, 3>& shape,
                                    const std::array<int64_t, 3>& target_shape,
                                    CropMode mode, uint64_t rng_seed);

VolumeRecord crop_for_training(const VolumeRecord& v,
                               const std::array<int64_t, 3>& target_shape, CropMode mode,
                               uint64_t rng_seed);

// Extracts the window starting at `offsets` (used by the training loop so the
// same window can be applied to volume and mask geometry).
VolumeRecord crop_at(const VolumeRecord& v, const std::array<int64_t, 3>& offsets,
                     const std::array<int64_t, 3>& target_shape);

}  // namespace radalign
