#pragma once

#include <cstdint>

namespace wgs {

// SplitMix64. All randomness in the library flows through this generator so
// that seeded runs are reproducible across platforms and standard-library
// versions (std::mt19937 distributions are not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound), rejection sampled to avoid modulo bias
  uint64_t next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  bool next_bool() { return (next() & 1) != 0; }

  // derives an independent stream, e.g. one per vertex
  static Rng derive(uint64_t seed, uint64_t stream) {
    Rng mix(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    return Rng(mix.next());
  }

 private:
  uint64_t state_;
};

}  // namespace wgs
