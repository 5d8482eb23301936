#pragma once

#include <cstdint>

namespace lieflow {

/// splitmix64, used only to spread seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xorshift64* generator. Deterministic and documented so reports are
/// reproducible: x ^= x>>12; x ^= x<<25; x ^= x>>27; return x * 2685821657736338717.
class XorShift64Star {
public:
  explicit XorShift64Star(std::uint64_t seed) {
    // never allow the all-zero state
    std::uint64_t s = seed;
    state_ = splitmix64(s);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
  std::uint64_t state_;
};

/// Independent stream for trial `index` of a seeded run. Streams depend only
/// on (seed, index), so parallel sweeps are reproducible and independent of
/// thread count.
inline XorShift64Star trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  const std::uint64_t a = splitmix64(s);
  s = index ^ 0xD1B54A32D192ED03ULL;
  const std::uint64_t b = splitmix64(s);
  return XorShift64Star(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

}  // namespace lieflow
