#pragma once

// Exhaustive identity grids: each closed form against its direct evaluation.

#include "mlr/identities.hpp"
#include "mlr/rational.hpp"
#include "mlr/sampling.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mlr {

struct GridSummary {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> branches;
  std::optional<std::string> first_failure;

  bool passed() const { return failures == 0; }

  void fail(std::string what) {
    ++failures;
    if (!first_failure) first_failure = std::move(what);
  }
};

/// Distinct fractions a/b in (0, 1/2] with b <= max_den, ascending.
inline std::vector<Rational> thresholds_up_to(std::int64_t max_den) {
  std::set<Rational> seen;
  for (std::int64_t b = 1; b <= max_den; ++b) {
    for (std::int64_t a = 1; 2 * a <= b; ++a) seen.insert(Rational(Integer(a), Integer(b)));
  }
  return {seen.begin(), seen.end()};
}

inline GridSummary verify_progression_grid(std::int64_t max_speed = 12, std::int64_t max_modulus = 12,
                                           std::int64_t max_den = 16, int times_per_case = 25,
                                           std::uint64_t seed = 0x5eed0001) {
  GridSummary g{"progression-sum", 0, 0, {}, std::nullopt};
  RationalSampler sampler(seed);
  const auto deltas = thresholds_up_to(max_den);
  for (std::int64_t s = 1; s <= max_speed; ++s) {
    for (std::int64_t m = 1; m <= max_modulus; ++m) {
      for (const auto& delta : deltas) {
        for (int i = 0; i < times_per_case; ++i) {
          ProgressionQuery q{s, m, delta, sampler.next_time(1000, -2, 2)};
          auto terms = progression_sum_terms(q);
          ++g.cases;
          ++g.branches[terms.sign < 0 ? "sign-negative" : terms.sign == 0 ? "sign-zero" : "sign-positive"];
          if (terms.inner_threshold == 0) ++g.branches["inner-threshold-0"];
          if (terms.inner_threshold == Rational(1, 2)) ++g.branches["inner-threshold-1/2"];
          Rational direct = progression_sum_direct(q);
          if (direct != terms.value) {
            g.fail("s=" + std::to_string(s) + " m=" + std::to_string(m) + " delta=" + delta.str() +
                   " t=" + q.time.str() + ": direct " + direct.str() + " formula " + terms.value.str());
          }
        }
      }
    }
  }
  return g;
}

inline GridSummary verify_corollary_grid(std::int64_t max_speed = 12, std::int64_t max_n = 12, int times_per_case = 10,
                                         std::uint64_t seed = 0x5eed0002) {
  GridSummary g{"progression-corollary", 0, 0, {}, std::nullopt};
  RationalSampler sampler(seed);
  for (std::int64_t s = 1; s <= max_speed; ++s) {
    for (std::int64_t n = 3; n <= max_n; ++n) {
      for (std::int64_t m = 2; m <= n; ++m) {
        if (n % m != 0) continue;
        const std::int64_t cd = (n / m) * gcd(s, m);
        for (int i = 0; i < times_per_case; ++i) {
          const Rational t = sampler.next_time(1000, -2, 2);
          ++g.cases;
          ++g.branches[cd <= 2 ? "cd-in-1-2" : "cd-above-2"];
          Rational corollary = progression_sum_corollary(s, n, m, t);
          Rational formula = progression_sum_formula({s, m, Rational(Integer(1), Integer(n)), t});
          if (corollary != formula) {
            g.fail("s=" + std::to_string(s) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " t=" + t.str() + ": corollary " + corollary.str() + " formula " + formula.str());
          }
        }
      }
    }
  }
  return g;
}

inline GridSummary verify_pair_integral_grid(std::int64_t max_speed = 15, std::int64_t max_den = 12) {
  GridSummary g{"pair-integral", 0, 0, {}, std::nullopt};
  const auto deltas = thresholds_up_to(max_den);
  for (std::int64_t s1 = 1; s1 <= max_speed; ++s1) {
    for (std::int64_t s2 = 1; s2 <= max_speed; ++s2) {
      if (s1 == s2) continue;
      for (const auto& d1 : deltas) {
        for (const auto& d2 : deltas) {
          PairQuery q{s1, s2, d1, d2};
          ++g.cases;
          const Rational formula = pair_integral_formula(q);
          const Rational oracle = pair_integral_oracle(q);
          const Rational unsafe = unsafe_pair_integral_formula(q);
          std::string where = "s=(" + std::to_string(s1) + "," + std::to_string(s2) + ") d=(" + d1.str() + "," +
                              d2.str() + ")";
          if (formula != oracle) g.fail(where + ": formula " + formula.str() + " oracle " + oracle.str());
          if (unsafe - formula != 2 * d1 + 2 * d2 - 1) g.fail(where + ": complement relation");
        }
      }
    }
  }
  return g;
}

}  // namespace mlr
