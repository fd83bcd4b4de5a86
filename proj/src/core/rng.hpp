#pragma once

#include <cstdint>
#include <random>

namespace tamp {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Mixes a base seed with salts to derive independent substream seeds.
inline std::uint64_t deriveSeed(std::uint64_t base, std::uint64_t salt1,
                                std::uint64_t salt2 = 0) {
  return splitmix64(splitmix64(base ^ (salt1 * 0x9e3779b97f4a7c15ULL)) ^ salt2);
}

/// Seedable deterministic random stream. All draws go through explicit
/// helpers (no std::*_distribution) so a seed fixes the exact sequence.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t nextUint() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Derives an independent stream; deterministic in (seed, salts).
  RngStream fork(std::uint64_t salt1, std::uint64_t salt2 = 0) const {
    return RngStream(deriveSeed(seed_, salt1, salt2));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tamp
