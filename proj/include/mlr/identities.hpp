#pragma once

// Closed forms for sums and integrals of safe functions, and the direct
// evaluations they are checked against.

#include "mlr/rational.hpp"
#include "mlr/safe_model.hpp"
#include "mlr/torus_intervals.hpp"

#include <cstdint>
#include <string>

namespace mlr {

/// Sum of safe(speed, threshold, time + i/modulus) over i = 0..modulus-1.
struct ProgressionQuery {
  std::int64_t speed = 1;
  std::int64_t modulus = 1;
  Rational threshold;
  Rational time;

  std::int64_t common_divisor() const { return gcd(speed, modulus); }
  std::int64_t reduced_modulus() const { return modulus / common_divisor(); }
  std::int64_t period_lcm() const { return speed * reduced_modulus(); }

  void validate() const {
    detail::require_speed(speed);
    if (modulus < 1) throw DomainError("modulus must be a positive integer, got " + std::to_string(modulus));
    detail::require_open_threshold(threshold);
  }
};

/// Intermediate quantities of the closed-form progression sum.
struct ProgressionTerms {
  std::int64_t common_divisor = 1;   // gcd(s, m)
  std::int64_t reduced_modulus = 1;  // m / gcd(s, m)
  std::int64_t period_lcm = 1;       // lcm(s, m)
  Rational centered;                 // <m^ delta>
  int sign = 0;
  Rational inner_threshold;          // ||m^ delta||, in [0, 1/2]
  Rational value;
};

inline Rational progression_sum_direct(const ProgressionQuery& q) {
  q.validate();
  Rational total;
  for (std::int64_t i = 0; i < q.modulus; ++i) {
    total += safe_midpoint(q.speed, q.threshold, q.time + Rational(Integer(i), Integer(q.modulus)));
  }
  return total;
}

inline ProgressionTerms progression_sum_terms(const ProgressionQuery& q) {
  q.validate();
  ProgressionTerms r;
  r.common_divisor = q.common_divisor();
  r.reduced_modulus = q.reduced_modulus();
  r.period_lcm = q.period_lcm();
  const Rational scaled = Rational(r.reduced_modulus) * q.threshold;
  r.centered = centered_frac(scaled);
  r.sign = sign(r.centered);
  r.inner_threshold = abs(r.centered);
  r.value = Rational(q.modulus) * (1 - 2 * q.threshold);
  if (r.sign != 0) {
    // Inner safe uses the Fourier conventions at thresholds 0 and 1/2.
    const Rational inner = safe_midpoint(r.period_lcm, r.inner_threshold, q.time) - 1 + 2 * r.inner_threshold;
    r.value += Rational(r.common_divisor * r.sign) * inner;
  }
  return r;
}

inline Rational progression_sum_formula(const ProgressionQuery& q) { return progression_sum_terms(q).value; }

/// Progression sum at threshold 1/n over a modulus m dividing n.
inline Rational progression_sum_corollary(std::int64_t speed, std::int64_t n, std::int64_t m, const Rational& t) {
  detail::require_speed(speed);
  if (n <= 2) throw DomainError("corollary requires n > 2");
  if (m <= 1) throw DomainError("corollary requires m > 1");
  if (n % m != 0) throw DomainError("corollary requires m | n");
  const std::int64_t d = gcd(speed, m);
  const std::int64_t c = n / m;
  const std::int64_t cd = c * d;
  if (cd == 1 || cd == 2) return Rational(m) - Rational(Integer(2), Integer(c));
  return Rational(m - d) + Rational(d) * safe_midpoint(lcm(speed, m), Rational(Integer(1), Integer(cd)), t);
}

/// Two runners with their own thresholds.
struct PairQuery {
  std::int64_t speed1 = 1;
  std::int64_t speed2 = 2;
  Rational threshold1;
  Rational threshold2;

  std::int64_t reduced1() const { return speed1 / gcd(speed1, speed2); }
  std::int64_t reduced2() const { return speed2 / gcd(speed1, speed2); }

  void validate() const {
    detail::require_speed(speed1);
    detail::require_speed(speed2);
    detail::require_open_threshold(threshold1);
    detail::require_open_threshold(threshold2);
  }
  void validate_distinct() const {
    validate();
    if (speed1 == speed2) throw DomainError("closed-form pair integral needs distinct speeds");
  }
};

namespace detail {
// [B2({a2 d1 - a1 d2}) - B2({a2 d1 + a1 d2})] / (a1 a2) with a_i the reduced speeds.
inline Rational pair_correction(const PairQuery& q) {
  const Rational a1(q.reduced1());
  const Rational a2(q.reduced2());
  const Rational diff = a2 * q.threshold1 - a1 * q.threshold2;
  const Rational sum = a2 * q.threshold1 + a1 * q.threshold2;
  return (bernoulli2(frac(diff)) - bernoulli2(frac(sum))) / (a1 * a2);
}
}  // namespace detail

/// Integral over [0,1) of safe(s1,d1,t) safe(s2,d2,t).
inline Rational pair_integral_formula(const PairQuery& q) {
  q.validate_distinct();
  return (1 - 2 * q.threshold1) * (1 - 2 * q.threshold2) + detail::pair_correction(q);
}

/// Integral over [0,1) of unsafe(s1,d1,t) unsafe(s2,d2,t).
inline Rational unsafe_pair_integral_formula(const PairQuery& q) {
  q.validate_distinct();
  return 4 * q.threshold1 * q.threshold2 + detail::pair_correction(q);
}

/// Measure of the simultaneous safe set, computed by interval intersection.
inline Rational pair_integral_oracle(const PairQuery& q) {
  q.validate();
  return intersect(safe_set(q.speed1, q.threshold1), safe_set(q.speed2, q.threshold2)).measure();
}

}  // namespace mlr
