#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "radalign/labels.hpp"
#include "radalign/manifest.hpp"
#include "radalign/volume.hpp"

namespace radalign {

// Planted-signal corpus: each positive class plants a class-specific bright
// ellipsoid (fixed center, radii and intensity band per class) into a noisy
// air-like background, in Hounsfield units. Reports are rendered from the
// label vector with positive and explicit-negation sentence templates.

struct Ellipsoid {
  std::array<double, 3> center;  // voxel coordinates
  std::array<double, 3> radii;
};

// Deterministic, mutually non-overlapping signature placement: classes are
// laid out on a 3D grid inside the central 60% of the volume.
Ellipsoid signature_region(int class_index, int n_classes,
                           const std::array<int64_t, 3>& shape);

// Mean HU inside the planted ellipsoid for this class; well above background.
double signature_intensity_hu(int class_index);

struct SyntheticCorpus {
  std::vector<VolumeRecord> volumes;  // raw HU, not normalized
  std::vector<ReportRecord> reports;
  std::vector<LabelVector> labels;  // hard
};

// Bijectively paired corpus of n items; bit-identical for identical seeds.
SyntheticCorpus generate_synthetic_corpus(int n, const std::vector<std::string>& vocabulary,
                                          const std::array<int64_t, 3>& volume_shape,
                                          uint64_t rng_seed, double positive_rate = 0.35);

// Rasterizes the class signature as a {0,1} mask over a window of the volume:
// out_shape voxels sampled from the window [crop_offset, crop_offset + window)
// of the full volume (used for auxiliary segmentation supervision at feature
// resolution). window defaults to the full shape when equal to out_shape.
Tensor signature_mask(int class_index, int n_classes,
                      const std::array<int64_t, 3>& full_shape,
                      const std::array<int64_t, 3>& crop_offset,
                      const std::array<int64_t, 3>& window,
                      const std::array<int64_t, 3>& out_shape);

}  // namespace radalign
