#include "mlr/safe_model.hpp"
#include "mlr/sampling.hpp"
#include "mlr/torus_intervals.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace mlr {
namespace {

Rational R(const char* s) { return Rational::parse(s); }
ClosedInterval I(const char* lo, const char* hi) { return {R(lo), R(hi)}; }
TorusIntervalSet S(std::vector<ClosedInterval> v) { return TorusIntervalSet::canonicalize(std::move(v)); }

std::vector<ClosedInterval> pieces_of(const TorusIntervalSet& s) { return {s.pieces().begin(), s.pieces().end()}; }

TEST(Canonicalize, MergesAtSharedEndpoint) {
  EXPECT_EQ(pieces_of(S({I("1/4", "1/2"), I("1/2", "3/4")})), (std::vector{I("1/4", "3/4")}));
}

TEST(Canonicalize, EmptyInput) { EXPECT_TRUE(S({}).empty()); }

TEST(Canonicalize, SortsAndKeepsDegeneratePoints) {
  EXPECT_EQ(pieces_of(S({I("3/8", "3/8"), I("1/8", "1/4")})), (std::vector{I("1/8", "1/4"), I("3/8", "3/8")}));
}

TEST(Canonicalize, RejectsBadIntervals) {
  EXPECT_THROW(S({I("1/2", "1/4")}), DomainError);
  EXPECT_THROW(S({I("-1/4", "1/4")}), DomainError);
  EXPECT_THROW(S({I("1/2", "1")}), DomainError);
}

TEST(Canonicalize, AbsorbsPointsInsidePieces) {
  EXPECT_EQ(pieces_of(S({I("1/4", "1/2"), I("1/3", "1/3"), I("1/2", "1/2")})), (std::vector{I("1/4", "1/2")}));
}

TEST(Intersect, EndpointTouchKeepsPoints) {
  auto a = S({I("1/3", "2/3")});
  auto b = S({I("1/6", "1/3"), I("2/3", "5/6")});
  auto expected = S({I("1/3", "1/3"), I("2/3", "2/3")});
  EXPECT_EQ(intersect(a, b), expected);
  // Sweep-free reference built from pointwise membership.
  auto bps = oracle::jumps({});
  for (auto x : {"1/3", "2/3", "1/6", "5/6"}) bps.insert(R(x));
  EXPECT_EQ(oracle::rebuild(bps, [&](const Rational& t) { return a.contains(t) && b.contains(t); }), expected);
}

TEST(Intersect, WithEmpty) {
  auto a = S({I("1/3", "2/3")});
  EXPECT_TRUE(intersect(a, TorusIntervalSet()).empty());
  EXPECT_TRUE(intersect(TorusIntervalSet(), a).empty());
}

TEST(Intersect, TwoPieceOverlap) {
  auto a = S({I("1/4", "3/4")});
  auto b = S({I("1/8", "3/8"), I("5/8", "7/8")});
  auto got = intersect(a, b);
  EXPECT_EQ(got, S({I("1/4", "3/8"), I("5/8", "3/4")}));
  // Grid membership sampling at denominator 64 agrees.
  for (int k = 0; k < 64; ++k) {
    Rational t{Integer(k), Integer(64)};
    EXPECT_EQ(got.contains(t), a.contains(t) && b.contains(t)) << t;
  }
}

TEST(Complement, MiddleThird) {
  auto c = complement(S({I("1/3", "2/3")}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.pieces()[0], I("0", "1/3"));
  EXPECT_EQ(c.pieces()[1].lo, R("2/3"));
  EXPECT_EQ(c.pieces()[1].hi, R("1"));
  EXPECT_TRUE(c.right_open_at_one());
  EXPECT_TRUE(c.contains(R("9/10")));
  EXPECT_TRUE(c.contains(R("1")));  // 1 is 0 on the circle
  EXPECT_FALSE(c.contains(R("1/2")));
  EXPECT_EQ(c.measure(), R("2/3"));
}

TEST(Complement, EdgeCases) {
  EXPECT_EQ(complement(TorusIntervalSet()), TorusIntervalSet::full());
  EXPECT_TRUE(complement(TorusIntervalSet::full()).empty());
  EXPECT_EQ(complement(S({I("1/4", "1/4")})), TorusIntervalSet::full());
  EXPECT_EQ(complement(complement(S({I("1/3", "2/3")}))), S({I("1/3", "2/3")}));
  auto c = complement(S({I("0", "1/4")}));
  EXPECT_EQ(pieces_of(c), (std::vector{I("1/4", "1")}));
}

TEST(Union, Examples) {
  auto x = S({I("1/8", "1/4"), I("1/2", "1/2")});
  EXPECT_EQ(unite(TorusIntervalSet(), x), x);
  EXPECT_EQ(unite(S({I("0", "1/4")}), S({I("1/4", "1/2")})), S({I("0", "1/2")}));
}

TEST(Measure, Examples) {
  EXPECT_EQ(S({I("1/3", "2/3")}).measure(), R("1/3"));
  EXPECT_EQ(S({I("1/4", "1/4"), I("3/4", "3/4")}).measure(), R("0"));
  EXPECT_EQ(S({I("1/4", "3/8"), I("5/8", "3/4")}).measure(), R("1/4"));
}

TEST(MinElement, Examples) {
  EXPECT_EQ(S({I("1/4", "1/4"), I("3/4", "3/4")}).min_element(), R("1/4"));
  EXPECT_FALSE(TorusIntervalSet().min_element().has_value());
  EXPECT_EQ(S({I("13/16", "7/8"), I("1/8", "3/16")}).min_element(), R("1/8"));
}

TEST(Contains, Examples) {
  EXPECT_TRUE(S({I("1/3", "2/3")}).contains(R("1/3")));
  EXPECT_FALSE(S({I("1/3", "2/3")}).contains(R("1/4")));
  EXPECT_TRUE(S({I("3/8", "3/8")}).contains(R("3/8")));
  EXPECT_TRUE(S({I("3/8", "3/8")}).contains(R("11/8")));
  EXPECT_TRUE(S({I("3/8", "3/8")}).contains(R("-5/8")));
}

// Random canonical sets on a small denominator grid, so touching and degenerate cases are common.
TorusIntervalSet random_set(RationalSampler& rng) {
  const std::int64_t den = rng.next_int(2, 12);
  std::vector<ClosedInterval> raw;
  const int n = static_cast<int>(rng.next_int(0, 4));
  for (int i = 0; i < n; ++i) {
    std::int64_t a = rng.next_int(0, den - 1), b = rng.next_int(0, den - 1);
    if (a > b) std::swap(a, b);
    raw.push_back({Rational(Integer(a), Integer(den)), Rational(Integer(b), Integer(den))});
  }
  std::reverse(raw.begin(), raw.end());
  return TorusIntervalSet::canonicalize(std::move(raw));
}

TEST(IntervalProperties, AlgebraOnRandomSets) {
  RationalSampler rng(2024);
  for (int iter = 0; iter < 600; ++iter) {
    auto a = random_set(rng);
    auto b = random_set(rng);
    // Idempotent and order-insensitive canonical form.
    std::vector<ClosedInterval> raw(a.pieces().begin(), a.pieces().end());
    std::reverse(raw.begin(), raw.end());
    ASSERT_EQ(TorusIntervalSet::canonicalize(raw), a);

    auto i = intersect(a, b);
    auto u = unite(a, b);
    ASSERT_EQ(intersect(a, b), intersect(b, a));
    ASSERT_EQ(u, unite(b, a));
    ASSERT_EQ(u.measure() + i.measure(), a.measure() + b.measure());
    ASSERT_EQ(complement(a).measure(), 1 - a.measure());
    for (int k = 0; k < 20; ++k) {
      const Rational t = rng.next_time(60);
      ASSERT_EQ(i.contains(t), a.contains(t) && b.contains(t)) << t;
      ASSERT_EQ(u.contains(t), a.contains(t) || b.contains(t)) << t;
      if (!a.contains(t)) {
        ASSERT_TRUE(complement(a).contains(t)) << t;
      }
    }
  }
}

TEST(IntervalProperties, SymmetryPreservedBySafeSetOperations) {
  // Safe sets never touch 0, so t -> 1 - t maps pieces to pieces directly.
  auto reflect = [](const TorusIntervalSet& s) {
    std::vector<ClosedInterval> raw;
    for (const auto& p : s.pieces()) raw.push_back({1 - p.hi, 1 - p.lo});
    return TorusIntervalSet::canonicalize(std::move(raw));
  };
  RationalSampler rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    auto a = safe_set(rng.next_int(1, 9), Rational(Integer(rng.next_int(1, 6)), Integer(12)));
    auto b = safe_set(rng.next_int(1, 9), Rational(Integer(rng.next_int(1, 6)), Integer(12)));
    ASSERT_EQ(reflect(a), a);
    ASSERT_EQ(reflect(intersect(a, b)), intersect(a, b));
    ASSERT_EQ(reflect(unite(a, b)), unite(a, b));
  }
}

}  // namespace
}  // namespace mlr
