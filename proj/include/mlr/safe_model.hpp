#pragma once

// Safe and unsafe indicator functions of a single runner.
//
// A runner of speed s is delta-safe at time t when ||s t|| >= delta. Two
// pointwise semantics are kept apart: the closed indicator used for deciding
// loneliness, and the midpoint-valued function whose Fourier series converges
// to it (1/2 on the boundary, safe(s,0,t) = 1 and safe(s,1/2,t) = 0).

#include "mlr/rational.hpp"
#include "mlr/torus_intervals.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace mlr {

enum class Semantics { ClosedIndicator, FourierMidpoint };

struct SafeSpec {
  std::int64_t speed = 1;
  Rational threshold;
  Semantics semantics = Semantics::FourierMidpoint;

  void validate() const {
    if (speed < 1) throw DomainError("speed must be a positive integer, got " + std::to_string(speed));
    if (threshold < 0 || threshold > Rational(1, 2))
      throw DomainError("threshold must lie in [0, 1/2], got " + threshold.str());
  }
};

namespace detail {
inline void require_open_threshold(const Rational& delta) {
  if (delta <= 0 || delta > Rational(1, 2))
    throw DomainError("threshold must lie in (0, 1/2], got " + delta.str());
}
inline void require_speed(std::int64_t s) {
  if (s < 1) throw DomainError("speed must be a positive integer, got " + std::to_string(s));
}
}  // namespace detail

/// {t in [0,1) : ||s t|| >= delta}, one closed piece per period.
inline TorusIntervalSet safe_set(std::int64_t speed, const Rational& delta) {
  detail::require_speed(speed);
  detail::require_open_threshold(delta);
  std::vector<ClosedInterval> pieces;
  pieces.reserve(static_cast<std::size_t>(speed));
  const Rational s(speed);
  for (std::int64_t k = 0; k < speed; ++k) {
    pieces.push_back({(Rational(k) + delta) / s, (Rational(k + 1) - delta) / s});
  }
  return TorusIntervalSet::canonicalize(std::move(pieces));
}

inline Rational safe_exact(const SafeSpec& spec, const Rational& t) {
  spec.validate();
  const Rational dist = nearest_int_dist(Rational(spec.speed) * t);
  if (spec.semantics == Semantics::ClosedIndicator) return dist >= spec.threshold ? 1 : 0;
  if (spec.threshold == 0) return 1;
  if (spec.threshold == Rational(1, 2)) return 0;
  auto c = dist <=> spec.threshold;
  if (c > 0) return 1;
  if (c == 0) return Rational(1, 2);
  return 0;
}

inline Rational unsafe_exact(const SafeSpec& spec, const Rational& t) { return 1 - safe_exact(spec, t); }

/// Midpoint-valued safe(s, delta, t), the form the closed-form identities are stated in.
inline Rational safe_midpoint(std::int64_t speed, const Rational& delta, const Rational& t) {
  return safe_exact({speed, delta, Semantics::FourierMidpoint}, t);
}

inline Rational unsafe_midpoint(std::int64_t speed, const Rational& delta, const Rational& t) {
  return 1 - safe_midpoint(speed, delta, t);
}

/// Partial Fourier sum of the unsafe pulse wave through harmonic `terms`.
/// Approximate only; nothing exact is derived from it.
inline double fourier_partial_unsafe(std::int64_t speed, double delta, double t, std::int64_t terms) {
  detail::require_speed(speed);
  if (!(delta > 0.0 && delta < 0.5)) throw DomainError("Fourier evaluation needs 0 < delta < 1/2");
  if (terms < 1) throw DomainError("Fourier evaluation needs at least one term");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double phase = t * static_cast<double>(speed);
  double sum = 0.0;
  for (std::int64_t j = 1; j <= terms; ++j) {
    const double jd = static_cast<double>(j);
    // Reduce the arguments mod 1 before scaling so large j keeps full precision.
    const double a = jd * delta;
    const double b = jd * phase;
    sum += std::sin(two_pi * (a - std::floor(a))) / jd * std::cos(two_pi * (b - std::floor(b)));
  }
  return 2.0 * delta + (2.0 / std::numbers::pi) * sum;
}

/// Distance from t to the nearest jump (k +/- delta)/s of the pulse wave, on the circle.
inline double discontinuity_distance(std::int64_t speed, double delta, double t) {
  const double s = static_cast<double>(speed);
  double best = 1.0;
  for (std::int64_t k = -1; k <= speed; ++k) {
    for (double jump : {(static_cast<double>(k) + delta) / s, (static_cast<double>(k) - delta) / s}) {
      best = std::min(best, std::abs(t - std::floor(t) - jump));
    }
  }
  return best;
}

}  // namespace mlr
