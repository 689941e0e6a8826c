#pragma once

// Deciding a mixed lonely runner statement for one concrete speed tuple, and
// the exact description of the two-runner parameter space.

#include "mlr/rational.hpp"
#include "mlr/safe_model.hpp"
#include "mlr/torus_intervals.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlr {

/// Speeds and thresholds aligned by index: runner i must reach distance thresholds[i].
struct MlrcInstance {
  std::vector<std::int64_t> speeds;
  std::vector<Rational> thresholds;

  std::size_t dimension() const { return speeds.size(); }

  void validate() const {
    if (speeds.size() != thresholds.size())
      throw DomainError("speed and threshold lists differ in length (" + std::to_string(speeds.size()) + " vs " +
                        std::to_string(thresholds.size()) + ")");
    if (speeds.empty()) throw DomainError("instance needs at least one runner");
    for (auto s : speeds) detail::require_speed(s);
    for (const auto& d : thresholds) detail::require_open_threshold(d);
    std::vector<std::int64_t> sorted = speeds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("speeds must be pairwise distinct");
  }
};

enum class Outcome { Witness, Empty };

inline std::string_view to_string(Outcome o) { return o == Outcome::Witness ? "witness" : "empty"; }

struct Verdict {
  Outcome outcome = Outcome::Empty;
  std::optional<Rational> witness_time;
  std::vector<Rational> distances;  // ||s_i t|| at the witness time
  TorusIntervalSet intersection;    // the certificate in either case

  bool is_witness() const { return outcome == Outcome::Witness; }
};

namespace detail {
// Indices of the instance ordered by speed; intersecting small-period sets first keeps pieces few.
inline std::vector<std::size_t> speed_order(const std::vector<std::int64_t>& speeds) {
  std::vector<std::size_t> order(speeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return speeds[a] < speeds[b]; });
  return order;
}

inline Verdict make_verdict(const std::vector<std::int64_t>& speeds, TorusIntervalSet intersection) {
  Verdict v;
  v.intersection = std::move(intersection);
  if (auto t = v.intersection.min_element()) {
    v.outcome = Outcome::Witness;
    v.witness_time = *t;
    v.distances.reserve(speeds.size());
    for (auto s : speeds) v.distances.push_back(nearest_int_dist(Rational(s) * *t));
  }
  return v;
}
}  // namespace detail

inline Verdict decide_mlrc(const MlrcInstance& inst) {
  inst.validate();
  auto order = detail::speed_order(inst.speeds);
  TorusIntervalSet acc = safe_set(inst.speeds[order[0]], inst.thresholds[order[0]]);
  for (std::size_t i = 1; i < order.size() && !acc.empty(); ++i) {
    acc = intersect(acc, safe_set(inst.speeds[order[i]], inst.thresholds[order[i]]));
  }
  return detail::make_verdict(inst.speeds, std::move(acc));
}

enum class Mlps2Inequality { TwoD1PlusD2, D1PlusTwoD2 };

inline std::string_view inequality_id(Mlps2Inequality i) {
  return i == Mlps2Inequality::TwoD1PlusD2 ? "2d1+d2<=1" : "d1+2d2<=1";
}

struct Mlps2Violation {
  Mlps2Inequality inequality;
  Rational lhs;
  std::array<std::int64_t, 2> witness_speeds;
};

struct Mlps2Result {
  bool member = true;
  std::vector<Mlps2Violation> violations;
};

/// Membership in the two-runner parameter space: 2 d1 + d2 <= 1 and d1 + 2 d2 <= 1.
inline Mlps2Result mlps2_membership(const Rational& d1, const Rational& d2) {
  detail::require_open_threshold(d1);
  detail::require_open_threshold(d2);
  Mlps2Result r;
  Rational first = 2 * d1 + d2;
  Rational second = d1 + 2 * d2;
  if (first > 1) r.violations.push_back({Mlps2Inequality::TwoD1PlusD2, std::move(first), {1, 2}});
  if (second > 1) r.violations.push_back({Mlps2Inequality::D1PlusTwoD2, std::move(second), {2, 1}});
  r.member = r.violations.empty();
  return r;
}

struct OverlapCheck {
  bool holds = false;
  Rational lhs;
};

/// s2 (1 - 2 d1) + s1 (1 - 2 d2) >= 1: nearby safe-interval centres overlap.
/// Thresholds may sit on the closed square [0, 1/2]^2 so polygon vertices can be probed.
inline OverlapCheck overlap_inequality(std::int64_t s1, std::int64_t s2, const Rational& d1, const Rational& d2) {
  detail::require_speed(s1);
  detail::require_speed(s2);
  if (gcd(s1, s2) != 1) throw DomainError("overlap inequality needs coprime speeds");
  for (const auto* d : {&d1, &d2}) {
    if (*d < 0 || *d > Rational(1, 2)) throw DomainError("threshold must lie in [0, 1/2], got " + d->str());
  }
  OverlapCheck c;
  c.lhs = Rational(s2) * (1 - 2 * d1) + Rational(s1) * (1 - 2 * d2);
  c.holds = c.lhs >= 1;
  return c;
}

}  // namespace mlr
