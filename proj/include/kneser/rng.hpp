#pragma once
// SplitMix64: the project-wide deterministic RNG. Seedable, splittable into
// independent labeled child streams, and bit-stable across platforms (std
// distributions are implementation-defined, so they are not used anywhere).

#include <cstdint>

namespace kneser {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound) by rejection.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  double next_unit() { return (next() >> 11) * 0x1.0p-53; }

  // Independent child stream; children with distinct labels never share state
  // with each other or with the parent sequence.
  SplitMix64 split(uint64_t label) const {
    SplitMix64 h(state ^ (label + 0x9e3779b97f4a7c15ull) * 0xff51afd7ed558ccdull);
    uint64_t s = h.next();
    s ^= h.next();
    return SplitMix64(s);
  }
};

}  // namespace kneser
