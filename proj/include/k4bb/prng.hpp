#pragma once

#include <cstdint>
#include <stdexcept>

#include "k4bb/rational.hpp"

namespace k4bb {

/// SplitMix64. Fixed state transition so generated instances are bit-identical
/// across platforms and toolchains:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// True with probability num/den, exactly.
  bool chance(const Rational& p) {
    BigInt num = rat_num(p), den = rat_den(p);
    if (num < 0 || den <= 0 || num > den) throw std::invalid_argument("probability outside [0,1]");
    if (num == 0) return false;
    if (num == den) return true;
    if (den > BigInt(~0ULL >> 1)) throw std::invalid_argument("probability denominator too large");
    return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
  }
};

}  // namespace k4bb
