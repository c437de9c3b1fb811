#pragma once

#include <cstdint>

namespace nlcs {

/// Counter-based deterministic generator: output i is splitmix64(seed, i).
/// Streams derived from (seed, stream) pairs are independent, which lets
/// Monte Carlo trials be partitioned deterministically across workers.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool coin() { return next() & 1; }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace nlcs
