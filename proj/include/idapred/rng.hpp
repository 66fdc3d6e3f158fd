#pragma once

#include <cstdint>

namespace idapred {

// Deterministic, splittable PRNG (xoshiro256** seeded via splitmix64).
// std::uniform_int_distribution is implementation-defined, so bounded draws
// are done here to keep results reproducible across platforms.
class Rng {
public:
  Rng() : Rng(0) {}

  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : s_) w = splitmix64(x);
  }

  // Independent stream: hashes (seed, stream) into a fresh state.
  Rng(uint64_t seed, uint64_t stream) {
    uint64_t x = seed;
    uint64_t a = splitmix64(x);
    x ^= stream * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull;
    for (auto& w : s_) w = splitmix64(x);
    s_[0] ^= a;
  }

  uint64_t next() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, n) via 128-bit multiply (Lemire); n must be > 0.
  uint32_t below(uint32_t n) {
    uint64_t x = next() >> 32;
    return static_cast<uint32_t>((x * n) >> 32);
  }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  static uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  uint64_t s_[4];
};

}  // namespace idapred
