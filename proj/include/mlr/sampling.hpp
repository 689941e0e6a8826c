#pragma once

// Seeded rational sample points. Uses raw mt19937_64 output rather than the
// standard distributions so sequences are identical across standard libraries.

#include "mlr/rational.hpp"

#include <cstdint>
#include <random>

namespace mlr {

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_u64() { return rng_(); }

  /// Uniform-ish integer in [lo, hi].
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  /// p/q with 1 <= q <= max_den and p/q in [lo_periods, hi_periods).
  Rational next_time(std::int64_t max_den, std::int64_t lo_periods = 0, std::int64_t hi_periods = 1) {
    const std::int64_t den = next_int(1, max_den);
    const std::int64_t num = next_int(lo_periods * den, hi_periods * den - 1);
    return Rational(Integer(num), Integer(den));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mlr
