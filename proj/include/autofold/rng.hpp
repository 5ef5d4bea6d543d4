#pragma once

#include <cstdint>
#include <random>

namespace autofold {

// Deterministic random source. mt19937_64 has a fully specified sequence, and
// the helpers below avoid std::uniform_*_distribution, whose output is
// implementation-defined; the same seed must yield the same stream on every
// platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53 bits of precision.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Rejection keeps the draw unbiased.
  uint64_t next_below(uint64_t bound) {
    uint64_t rem = (UINT64_MAX % bound) + 1;
    if (rem == bound) rem = 0;
    const uint64_t limit = UINT64_MAX - rem;
    uint64_t r = engine_();
    while (r > limit) r = engine_();
    return r % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace autofold
