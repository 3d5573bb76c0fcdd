#pragma once

#include <cstdint>

namespace pdcbell {

/// splitmix64: a counter-based 64-bit generator (Steele, Lea, Flood style
/// output mixing over a Weyl sequence). Streams with nearby seeds are
/// statistically independent, which makes seed+shard-index sharding sound.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace pdcbell
