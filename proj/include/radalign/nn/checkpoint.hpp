#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "radalign/tensor.hpp"

namespace radalign {

// Single-file training state container: named, shaped tensors stored as
// 32-bit little-endian floats plus a step counter, rng state and config hash.
// Saving is a float32 projection of the in-memory doubles; a saved file
// round-trips byte-identically through load + save.
struct Checkpoint {
  std::string config_hash;
  int64_t step = 0;
  std::string rng_state;
  std::map<std::string, Tensor> tensors;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace radalign
