#pragma once

#include <cstdint>

namespace specmatch {

/// splitmix64 (Steele, Lea, Flood's mixing constants): state advances by
/// the golden-ratio increment and each output is finalized with two
/// xor-shift multiplies. Chosen because its output sequence is fixed by
/// the 64-bit seed alone, with no implementation-defined behavior, so
/// seeded runs reproduce bit-for-bit everywhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

}  // namespace specmatch
