#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radalign {

// Deterministic random source. All sampling is implemented on top of the raw
// 64-bit stream (uniform via the top 53 bits, normal via Box-Muller) so that
// sequences are reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(next_u64());  // full range
    // Lemire's multiply-shift with rejection to remove modulo bias.
    uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * span;
    uint64_t l = static_cast<uint64_t>(m);
    if (l < span) {
      const uint64_t t = (0 - span) % span;
      while (l < t) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * span;
        l = static_cast<uint64_t>(m);
      }
    }
    return lo + static_cast<int64_t>(m >> 64);
  }

  double normal(double mean = 0.0, double stddev = 1.0) {
    if (has_cached_) {
      has_cached_ = false;
      return mean + stddev * cached_;
    }
    // Box-Muller; u1 in (0,1] so log() is finite.
    double u1 = 1.0 - uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return mean + stddev * r * std::cos(theta);
  }

  // Derives an independent child stream from the construction seed and a tag.
  // Forking does not consume state from this stream.
  Rng fork(std::string_view tag) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return Rng(splitmix64(seed_ ^ h));
  }

  Rng fork(uint64_t tag) const { return Rng(splitmix64(seed_ ^ tag)); }

  std::string serialize() const {
    std::ostringstream os;
    os << gen_ << " " << (has_cached_ ? 1 : 0) << " ";
    os.precision(17);
    os << cached_ << " " << seed_;
    return os.str();
  }

  static Rng deserialize(const std::string& s) {
    std::istringstream is(s);
    Rng r(0);
    int cached_flag = 0;
    is >> r.gen_ >> cached_flag >> r.cached_ >> r.seed_;
    if (!is) throw std::invalid_argument("rng: malformed serialized state");
    r.has_cached_ = cached_flag != 0;
    return r;
  }

  static uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace radalign
