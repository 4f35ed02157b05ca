#pragma once

#include <cstdint>

namespace icm {

// Deterministic splitmix64 stream. std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by hand to keep
// outputs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
  std::uint64_t bounded(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Key mixing for independent substreams: fold values into a fresh seed.
inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_key(mix_key(a, b), c);
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                             std::uint64_t d) {
  return mix_key(mix_key(a, b, c), d);
}

}  // namespace icm
