#pragma once

#include <cstdint>
#include <random>

namespace bfgp {

// Deterministic RNG used everywhere. The engine is std::mt19937_64 (its
// output sequence is fixed by the standard); the bounded/real mappings are
// implemented here so results do not depend on libstdc++'s distribution
// internals.
class Rng {
public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  uint64_t below(uint64_t bound) {
    // Lemire's multiply-shift with rejection.
    uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1), 53-bit resolution.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  bool coin() { return (next_u64() & 1) != 0; }

  // Deterministic per-stream seed derivation (splitmix64 finalizer).
  static uint64_t derive(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace bfgp
