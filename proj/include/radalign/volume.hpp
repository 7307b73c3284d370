#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "radalign/tensor.hpp"

namespace radalign {

// One 3D scan. Voxels are Hounsfield units before normalization and
// dimensionless values in [-1, 1] after. Shape is {d0, d1, d2} with axis 2
// contiguous, matching the on-disk container.
struct VolumeRecord {
  std::string id;
  Tensor voxels;
  std::array<double, 3> spacing_mm{1.0, 1.0, 1.0};
  bool normalized = false;

  // Enforces the type invariants: positive spacings, non-empty in all three
  // dimensions, and values within [-1, 1] once normalized.
  void validate() const;
};

// Binary volume container: magic "VOL1", three uint32 LE dims, three float32
// LE spacings, then dims-product float32 LE voxels, axis-2 fastest.
void write_volume(const std::filesystem::path& path, const VolumeRecord& v);
VolumeRecord read_volume(const std::filesystem::path& path, const std::string& id,
                         bool normalized = false);

}  // namespace radalign
