#pragma once

#include <cstdint>

#include "racah/gaussian_rational.hpp"

namespace racah {

/// splitmix64. Hand-rolled so seeded draws are identical on every platform,
/// which std::uniform_int_distribution does not guarantee.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [lo, hi] via modulo; fine for test-parameter picking.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  GaussianRational nonzero_rational(long max_num = 12, long max_den = 9) {
    long num = 0;
    while (num == 0) num = range(-max_num, max_num);
    long den = range(1, max_den);
    return GaussianRational::rational(num, den);
  }

 private:
  uint64_t state_;
};

}  // namespace racah
