#include "radalign/nn/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

static_assert(std::endian::native == std::endian::little,
              "checkpoint io assumes a little-endian host");

namespace radalign {

namespace {

constexpr char kMagic[4] = {'C', 'K', 'P', 'T'};
constexpr uint32_t kVersion = 1;

void write_u32(std::ofstream& f, uint32_t v) { f.write(reinterpret_cast<const char*>(&v), 4); }
void write_u64(std::ofstream& f, uint64_t v) { f.write(reinterpret_cast<const char*>(&v), 8); }
void write_string(std::ofstream& f, const std::string& s) {
  write_u32(f, static_cast<uint32_t>(s.size()));
  f.write(s.data(), static_cast<std::streamsize>(s.size()));
}

uint32_t read_u32(std::ifstream& f) {
  uint32_t v = 0;
  f.read(reinterpret_cast<char*>(&v), 4);
  return v;
}
uint64_t read_u64(std::ifstream& f) {
  uint64_t v = 0;
  f.read(reinterpret_cast<char*>(&v), 8);
  return v;
}
std::string read_string(std::ifstream& f) {
  const uint32_t n = read_u32(f);
  std::string s(n, '\0');
  f.read(s.data(), n);
  return s;
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path.string());
  f.write(kMagic, 4);
  write_u32(f, kVersion);
  write_string(f, ckpt.config_hash);
  write_u64(f, static_cast<uint64_t>(ckpt.step));
  write_string(f, ckpt.rng_state);
  write_u32(f, static_cast<uint32_t>(ckpt.tensors.size()));
  for (const auto& [name, tensor] : ckpt.tensors) {
    write_string(f, name);
    write_u32(f, static_cast<uint32_t>(tensor.shape.size()));
    for (int64_t d : tensor.shape) write_u64(f, static_cast<uint64_t>(d));
    std::vector<float> buf(tensor.data.size());
    for (size_t i = 0; i < buf.size(); ++i) buf[i] = static_cast<float>(tensor.data[i]);
    f.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
  }
  if (!f) throw std::runtime_error("short write: " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open checkpoint: " + path.string());
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("bad checkpoint magic in " + path.string());
  const uint32_t version = read_u32(f);
  if (version != kVersion)
    throw std::runtime_error("unsupported checkpoint version in " + path.string());
  Checkpoint ckpt;
  ckpt.config_hash = read_string(f);
  ckpt.step = static_cast<int64_t>(read_u64(f));
  ckpt.rng_state = read_string(f);
  const uint32_t n_tensors = read_u32(f);
  for (uint32_t t = 0; t < n_tensors; ++t) {
    const std::string name = read_string(f);
    const uint32_t ndim = read_u32(f);
    std::vector<int64_t> shape(ndim);
    for (uint32_t d = 0; d < ndim; ++d) shape[d] = static_cast<int64_t>(read_u64(f));
    Tensor tensor(shape);
    std::vector<float> buf(tensor.data.size());
    f.read(reinterpret_cast<char*>(buf.data()),
           static_cast<std::streamsize>(buf.size() * sizeof(float)));
    for (size_t i = 0; i < buf.size(); ++i) tensor.data[i] = static_cast<double>(buf[i]);
    ckpt.tensors.emplace(name, std::move(tensor));
  }
  if (!f) throw std::runtime_error("truncated checkpoint: " + path.string());
  return ckpt;
}

}  // namespace radalign
