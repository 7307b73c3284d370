#include "radalign/volume.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

static_assert(std::endian::native == std::endian::little,
              "volume container io assumes a little-endian host");

namespace radalign {

namespace {
constexpr char kMagic[4] = {'V', 'O', 'L', '1'};
}

void VolumeRecord::validate() const {
  if (voxels.rank() != 3)
    throw std::invalid_argument("volume " + id + ": voxel array must be 3D");
  for (size_t a = 0; a < 3; ++a) {
    if (voxels.shape[a] <= 0)
      throw std::invalid_argument("volume " + id + ": empty dimension " + std::to_string(a));
    if (!(spacing_mm[a] > 0.0))
      throw std::invalid_argument("volume " + id + ": non-positive spacing");
  }
  if (normalized) {
    for (double v : voxels.data)
      if (v < -1.0 || v > 1.0)
        throw std::invalid_argument("volume " + id + ": normalized voxel outside [-1,1]");
  }
}

void write_volume(const std::filesystem::path& path, const VolumeRecord& v) {
  v.validate();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path.string());
  f.write(kMagic, 4);
  for (size_t a = 0; a < 3; ++a) {
    const uint32_t d = static_cast<uint32_t>(v.voxels.shape[a]);
    f.write(reinterpret_cast<const char*>(&d), 4);
  }
  for (size_t a = 0; a < 3; ++a) {
    const float s = static_cast<float>(v.spacing_mm[a]);
    f.write(reinterpret_cast<const char*>(&s), 4);
  }
  std::vector<float> buf(v.voxels.data.size());
  for (size_t i = 0; i < buf.size(); ++i) buf[i] = static_cast<float>(v.voxels.data[i]);
  f.write(reinterpret_cast<const char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!f) throw std::runtime_error("short write: " + path.string());
}

VolumeRecord read_volume(const std::filesystem::path& path, const std::string& id,
                         bool normalized) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open volume: " + path.string());
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("bad volume magic in " + path.string());
  uint32_t dims[3];
  float spacings[3];
  f.read(reinterpret_cast<char*>(dims), 12);
  f.read(reinterpret_cast<char*>(spacings), 12);
  if (!f) throw std::runtime_error("truncated volume header in " + path.string());
  VolumeRecord v;
  v.id = id;
  v.normalized = normalized;
  v.voxels = Tensor({static_cast<int64_t>(dims[0]), static_cast<int64_t>(dims[1]),
                     static_cast<int64_t>(dims[2])});
  for (size_t a = 0; a < 3; ++a) v.spacing_mm[a] = static_cast<double>(spacings[a]);
  std::vector<float> buf(v.voxels.data.size());
  f.read(reinterpret_cast<char*>(buf.data()),
         static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!f) throw std::runtime_error("truncated voxel data in " + path.string());
  for (size_t i = 0; i < buf.size(); ++i) v.voxels.data[i] = static_cast<double>(buf[i]);
  v.validate();
  return v;
}

}  // namespace radalign
