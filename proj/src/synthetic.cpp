#include "radalign/synthetic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "radalign/rng.hpp"

namespace radalign {

namespace {

std::array<int64_t, 3> signature_grid(int n_classes) {
  const int64_t g0 = static_cast<int64_t>(std::ceil(std::cbrt(static_cast<double>(n_classes))));
  const int64_t g1 = static_cast<int64_t>(
      std::ceil(std::sqrt(static_cast<double>(n_classes) / static_cast<double>(g0))));
  const int64_t g2 =
      (n_classes + g0 * g1 - 1) / (g0 * g1);
  return {g0, g1, g2};
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Ellipsoid signature_region(int class_index, int n_classes,
                           const std::array<int64_t, 3>& shape) {
  if (class_index < 0 || class_index >= n_classes)
    throw std::invalid_argument("signature_region: class index out of range");
  const auto grid = signature_grid(n_classes);
  const std::array<int64_t, 3> cell{class_index % grid[0],
                                    (class_index / grid[0]) % grid[1],
                                    class_index / (grid[0] * grid[1])};
  Ellipsoid e;
  for (size_t a = 0; a < 3; ++a) {
    const double extent = 0.6 * static_cast<double>(shape[a]) / static_cast<double>(grid[a]);
    e.center[a] = 0.2 * static_cast<double>(shape[a]) +
                  (static_cast<double>(cell[a]) + 0.5) * extent;
    e.radii[a] = 0.38 * extent;  // neighbors stay separated by >0.2 cell extents
  }
  return e;
}

double signature_intensity_hu(int class_index) { return -250.0 + 20.0 * class_index; }

SyntheticCorpus generate_synthetic_corpus(int n, const std::vector<std::string>& vocabulary,
                                          const std::array<int64_t, 3>& volume_shape,
                                          uint64_t rng_seed, double positive_rate) {
  if (n <= 0) throw std::invalid_argument("generate_synthetic_corpus: n must be positive");
  const int C = static_cast<int>(vocabulary.size());
  if (C < 2) throw std::invalid_argument("generate_synthetic_corpus: need at least 2 classes");
  for (int64_t d : volume_shape)
    if (d <= 0) throw std::invalid_argument("generate_synthetic_corpus: empty volume shape");

  std::vector<Ellipsoid> regions;
  regions.reserve(static_cast<size_t>(C));
  for (int k = 0; k < C; ++k) regions.push_back(signature_region(k, C, volume_shape));

  static const char* kPositiveTemplates[] = {"%s is present.",
                                             "Findings are consistent with %s."};
  static const char* kNegativeTemplates[] = {"No evidence of %s.", "%s is absent."};

  Rng root(rng_seed);
  SyntheticCorpus corpus;
  corpus.volumes.reserve(static_cast<size_t>(n));
  corpus.reports.reserve(static_cast<size_t>(n));
  corpus.labels.reserve(static_cast<size_t>(n));

  for (int idx = 0; idx < n; ++idx) {
    Rng rng = root.fork(static_cast<uint64_t>(idx));
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "synth-%06d", idx);
    const std::string id = idbuf;

    LabelVector label;
    label.vocabulary = vocabulary;
    label.kind = LabelKind::hard;
    for (int k = 0; k < C; ++k)
      label.values.push_back(rng.uniform01() < positive_rate ? 1.0 : 0.0);

    VolumeRecord vol;
    vol.id = id;
    vol.spacing_mm = {1.5, 1.5, 3.0};
    vol.normalized = false;
    vol.voxels = Tensor({volume_shape[0], volume_shape[1], volume_shape[2]});
    for (double& x : vol.voxels.data) x = -870.0 + 40.0 * rng.normal();
    for (int k = 0; k < C; ++k) {
      if (label.values[static_cast<size_t>(k)] != 1.0) continue;
      const Ellipsoid& e = regions[static_cast<size_t>(k)];
      const double hu = signature_intensity_hu(k);
      const int64_t i_lo = std::max<int64_t>(0, static_cast<int64_t>(e.center[0] - e.radii[0]) - 1);
      const int64_t i_hi = std::min(volume_shape[0], static_cast<int64_t>(e.center[0] + e.radii[0]) + 2);
      const int64_t j_lo = std::max<int64_t>(0, static_cast<int64_t>(e.center[1] - e.radii[1]) - 1);
      const int64_t j_hi = std::min(volume_shape[1], static_cast<int64_t>(e.center[1] + e.radii[1]) + 2);
      const int64_t l_lo = std::max<int64_t>(0, static_cast<int64_t>(e.center[2] - e.radii[2]) - 1);
      const int64_t l_hi = std::min(volume_shape[2], static_cast<int64_t>(e.center[2] + e.radii[2]) + 2);
      for (int64_t i = i_lo; i < i_hi; ++i)
        for (int64_t j = j_lo; j < j_hi; ++j)
          for (int64_t l = l_lo; l < l_hi; ++l) {
            const double d0 = (static_cast<double>(i) - e.center[0]) / e.radii[0];
            const double d1 = (static_cast<double>(j) - e.center[1]) / e.radii[1];
            const double d2 = (static_cast<double>(l) - e.center[2]) / e.radii[2];
            if (d0 * d0 + d1 * d1 + d2 * d2 <= 1.0)
              vol.voxels.at3(i, j, l) = hu + 20.0 * rng.normal();
          }
    }

    std::string text;
    for (int k = 0; k < C; ++k) {
      const bool positive = label.values[static_cast<size_t>(k)] == 1.0;
      const int64_t pick = rng.uniform_int(0, 1);
      const char* tmpl = positive ? kPositiveTemplates[pick] : kNegativeTemplates[pick];
      const std::string& name = vocabulary[static_cast<size_t>(k)];
      // Name goes verbatim at the start of a sentence, lowercased mid-sentence.
      const bool mid = std::string(tmpl).find("%s") > 0;
      char sentence[256];
      std::snprintf(sentence, sizeof(sentence), tmpl,
                    (mid ? lowercase(name) : name).c_str());
      if (!text.empty()) text += " ";
      text += sentence;
    }

    corpus.volumes.push_back(std::move(vol));
    corpus.reports.push_back(ReportRecord{id, text, id});
    corpus.labels.push_back(std::move(label));
  }
  return corpus;
}

Tensor signature_mask(int class_index, int n_classes,
                      const std::array<int64_t, 3>& full_shape,
                      const std::array<int64_t, 3>& crop_offset,
                      const std::array<int64_t, 3>& window,
                      const std::array<int64_t, 3>& out_shape) {
  const Ellipsoid e = signature_region(class_index, n_classes, full_shape);
  Tensor mask({out_shape[0], out_shape[1], out_shape[2]});
  for (int64_t i = 0; i < out_shape[0]; ++i)
    for (int64_t j = 0; j < out_shape[1]; ++j)
      for (int64_t l = 0; l < out_shape[2]; ++l) {
        std::array<double, 3> x;
        const std::array<int64_t, 3> idx{i, j, l};
        for (size_t a = 0; a < 3; ++a)
          x[a] = static_cast<double>(crop_offset[a]) +
                 (static_cast<double>(idx[a]) + 0.5) * static_cast<double>(window[a]) /
                     static_cast<double>(out_shape[a]) -
                 0.5;
        double r2 = 0.0;
        for (size_t a = 0; a < 3; ++a) {
          const double d = (x[a] - e.center[a]) / e.radii[a];
          r2 += d * d;
        }
        mask.at3(i, j, l) = r2 <= 1.0 ? 1.0 : 0.0;
      }
  return mask;
}

}  // namespace radalign
