#pragma once

#include <cstdint>

namespace basepack {

/// splitmix64 step. Also used as the per-trial seed derivation: trial i of a
/// run with master seed s draws its stream from mix64(s, i), so reports are
/// reproducible regardless of execution order.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + i * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic 64-bit stream (splitmix64). Identical seeds produce
/// identical draws on every platform; bounded draws use rejection sampling
/// so the distribution is exactly uniform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

  /// Uniform integer in the inclusive range [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Bernoulli with probability num/den.
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    return below(den) < num;
  }

  /// Bernoulli with real-valued probability p (clamped to [0, 1]).
  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return static_cast<double>(next()) < p * 18446744073709551616.0;
  }

 private:
  std::uint64_t state_;
};

}  // namespace basepack
