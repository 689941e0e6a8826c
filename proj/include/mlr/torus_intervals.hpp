#pragma once

// Canonical finite unions of closed intervals on the circle [0, 1).
//
// Pieces never wrap around 0. The only piece allowed to reach hi = 1 is the
// last piece of a complement, which is right-open there ([lo, 1)).

#include "mlr/rational.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mlr {

struct ClosedInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational length() const { return hi - lo; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

class TorusIntervalSet {
 public:
  TorusIntervalSet() = default;

  /// Sorts and merges raw pieces. Each piece must satisfy 0 <= lo <= hi < 1.
  static TorusIntervalSet canonicalize(std::vector<ClosedInterval> raw) {
    for (const auto& iv : raw) {
      if (iv.lo > iv.hi) throw DomainError("interval with lo > hi: [" + iv.lo.str() + ", " + iv.hi.str() + "]");
      if (iv.lo < 0 || iv.hi >= 1)
        throw DomainError("interval endpoint outside [0,1): [" + iv.lo.str() + ", " + iv.hi.str() + "]");
    }
    std::sort(raw.begin(), raw.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.hi < b.hi;
    });
    return from_sorted(std::move(raw));
  }

  /// The whole circle, stored as the single right-open piece [0, 1).
  static TorusIntervalSet full() {
    TorusIntervalSet s;
    s.pieces_.push_back({Rational(0), Rational(1)});
    return s;
  }

  std::span<const ClosedInterval> pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }

  /// True when the last piece is the right-open [lo, 1) produced by a complement.
  bool right_open_at_one() const { return !pieces_.empty() && pieces_.back().hi == 1; }

  Rational measure() const {
    Rational total;
    for (const auto& p : pieces_) total += p.length();
    return total;
  }

  std::optional<Rational> min_element() const {
    if (pieces_.empty()) return std::nullopt;
    return pieces_.front().lo;
  }

  /// Membership of frac(t) in some closed piece.
  bool contains(const Rational& t) const {
    Rational x = frac(t);
    // First piece with lo > x; the candidate is the one before it.
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& v, const ClosedInterval& p) { return v < p.lo; });
    if (it == pieces_.begin()) return false;
    --it;
    return x <= it->hi;
  }

  friend bool operator==(const TorusIntervalSet&, const TorusIntervalSet&) = default;

  friend TorusIntervalSet intersect(const TorusIntervalSet& a, const TorusIntervalSet& b);
  friend TorusIntervalSet unite(const TorusIntervalSet& a, const TorusIntervalSet& b);
  friend TorusIntervalSet complement(const TorusIntervalSet& a);

 private:
  // Input sorted by lo; merges overlapping or touching pieces.
  static TorusIntervalSet from_sorted(std::vector<ClosedInterval> sorted) {
    TorusIntervalSet s;
    s.pieces_.reserve(sorted.size());
    for (auto& iv : sorted) {
      if (!s.pieces_.empty() && iv.lo <= s.pieces_.back().hi) {
        if (iv.hi > s.pieces_.back().hi) s.pieces_.back().hi = std::move(iv.hi);
      } else {
        s.pieces_.push_back(std::move(iv));
      }
    }
    return s;
  }

  std::vector<ClosedInterval> pieces_;
};

/// Two-pointer sweep; touching endpoints survive as degenerate points.
inline TorusIntervalSet intersect(const TorusIntervalSet& a, const TorusIntervalSet& b) {
  TorusIntervalSet out;
  const auto& pa = a.pieces_;
  const auto& pb = b.pieces_;
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Rational& lo = pa[i].lo < pb[j].lo ? pb[j].lo : pa[i].lo;
    const Rational& hi = pa[i].hi < pb[j].hi ? pa[i].hi : pb[j].hi;
    if (lo <= hi) out.pieces_.push_back({lo, hi});
    auto c = pa[i].hi <=> pb[j].hi;
    if (c <= 0) ++i;
    if (c >= 0) ++j;
  }
  return out;
}

inline TorusIntervalSet unite(const TorusIntervalSet& a, const TorusIntervalSet& b) {
  std::vector<ClosedInterval> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.pieces_.begin(), a.pieces_.end(), b.pieces_.begin(), b.pieces_.end(),
             std::back_inserter(merged),
             [](const ClosedInterval& x, const ClosedInterval& y) { return x.lo < y.lo; });
  return TorusIntervalSet::from_sorted(std::move(merged));
}

/// Closure of [0,1) minus a. The piece running up to 1 is right-open.
inline TorusIntervalSet complement(const TorusIntervalSet& a) {
  std::vector<ClosedInterval> gaps;
  Rational cursor(0);
  for (std::size_t i = 0; i < a.pieces_.size(); ++i) {
    const auto& p = a.pieces_[i];
    if (i > 0 || p.lo > 0) gaps.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (!a.right_open_at_one()) gaps.push_back({cursor, Rational(1)});
  return TorusIntervalSet::from_sorted(std::move(gaps));
}

}  // namespace mlr
