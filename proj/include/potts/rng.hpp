#pragma once

// Pinned random number generator: xoshiro256++ 1.0 (Blackman/Vigna, public
// domain reference implementation), seeded through SplitMix64. The algorithm
// identity is part of the pc3 file format; changing it is a format break.
//
// Substreams: chain k of a multi-chain run uses the state produced by a
// SplitMix64 sequence started at seed + k * 0x9E3779B97F4A7C15.
//
// Bounded integers use the Lemire multiply-shift reduction (no rejection);
// doubles use the top 53 bits.

#include <cstdint>

namespace potts {

inline constexpr const char* kRngAlgorithmId = "xoshiro256pp-1.0";

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  static Rng for_chain(uint64_t seed, uint64_t chain) {
    return Rng(seed + chain * 0x9E3779B97F4A7C15ULL);
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, n).
  uint64_t bounded(uint64_t n) {
    return uint64_t((static_cast<__uint128_t>(next()) * n) >> 64);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  bool coin() { return next() >> 63; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace potts
