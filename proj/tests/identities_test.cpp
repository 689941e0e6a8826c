#include "mlr/identities.hpp"
#include "mlr/sampling.hpp"
#include "mlr/verification.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace mlr {
namespace {

Rational R(const char* s) { return Rational::parse(s); }

TEST(ProgressionDirect, Examples) {
  EXPECT_EQ(progression_sum_direct({1, 3, R("1/3"), R("0")}), R("1"));  // 0 + 1/2 + 1/2
  EXPECT_EQ(progression_sum_direct({2, 2, R("1/4"), R("0")}), R("0"));
  EXPECT_EQ(progression_sum_direct({1, 2, R("1/4"), R("0")}), R("1"));
}

TEST(ProgressionFormula, SignZeroBranch) {
  auto t = progression_sum_terms({1, 3, R("1/3"), R("0")});
  EXPECT_EQ(t.sign, 0);
  EXPECT_EQ(t.inner_threshold, R("0"));
  EXPECT_EQ(t.value, R("1"));
}

TEST(ProgressionFormula, SignNegativeBranch) {
  auto t = progression_sum_terms({1, 2, R("1/3"), R("0")});
  EXPECT_EQ(t.centered, R("-1/3"));
  EXPECT_EQ(t.sign, -1);
  EXPECT_EQ(t.period_lcm, 2);
  EXPECT_EQ(t.value, R("1"));
  EXPECT_EQ(progression_sum_direct({1, 2, R("1/3"), R("0")}), R("1"));
}

TEST(ProgressionFormula, HalfThresholdEndpointBranch) {
  auto t = progression_sum_terms({1, 2, R("1/4"), R("0")});
  EXPECT_EQ(t.inner_threshold, R("1/2"));
  EXPECT_EQ(t.sign, 1);
  EXPECT_EQ(t.value, R("1"));
}

TEST(ProgressionFormula, RejectsBadQueries) {
  EXPECT_THROW(progression_sum_formula({1, 2, R("0"), R("0")}), DomainError);
  EXPECT_THROW(progression_sum_formula({1, 0, R("1/4"), R("0")}), DomainError);
  EXPECT_THROW(progression_sum_direct({0, 2, R("1/4"), R("0")}), DomainError);
}

TEST(ProgressionFormula, MatchesDirectSumOnSmallGrid) {
  auto g = verify_progression_grid(6, 6, 8, 5, 7);
  EXPECT_TRUE(g.passed()) << g.first_failure.value_or("");
  EXPECT_GT(g.branches["sign-negative"], 0u);
  EXPECT_GT(g.branches["sign-zero"], 0u);
  EXPECT_GT(g.branches["sign-positive"], 0u);
  EXPECT_GT(g.branches["inner-threshold-1/2"], 0u);
}

TEST(ProgressionCorollary, Examples) {
  for (auto t : {"0", "1/7", "-3/5"}) EXPECT_EQ(progression_sum_corollary(1, 3, 3, R(t)), R("1")) << t;
  EXPECT_EQ(progression_sum_corollary(2, 4, 4, R("0")), R("2"));
  // Direct: safe(2, 1/4, i/4) = 0, 1, 0, 1.
  EXPECT_EQ(progression_sum_direct({2, 4, R("1/4"), R("0")}), R("2"));
  // m | s: every term equals the t term.
  RationalSampler rng(3);
  for (int i = 0; i < 20; ++i) {
    const Rational t = rng.next_time(100, -1, 1);
    EXPECT_EQ(progression_sum_corollary(3, 6, 3, t), 3 * safe_midpoint(3, R("1/6"), t)) << t;
  }
}

TEST(ProgressionCorollary, RejectsBadArguments) {
  EXPECT_THROW(progression_sum_corollary(1, 6, 4, R("0")), DomainError);
  EXPECT_THROW(progression_sum_corollary(1, 2, 2, R("0")), DomainError);
  EXPECT_THROW(progression_sum_corollary(1, 6, 1, R("0")), DomainError);
}

TEST(PairIntegral, Examples) {
  EXPECT_EQ(pair_integral_formula({1, 2, R("1/3"), R("1/3")}), R("0"));
  EXPECT_EQ(pair_integral_formula({1, 2, R("1/4"), R("1/4")}), R("1/4"));
  EXPECT_EQ(pair_integral_formula({1, 2, R("2/5"), R("3/10")}), R("0"));
  EXPECT_EQ(unsafe_pair_integral_formula({1, 2, R("1/3"), R("1/3")}), R("1/3"));
  EXPECT_EQ(unsafe_pair_integral_formula({1, 2, R("1/4"), R("1/4")}), R("1/4"));
  EXPECT_EQ(unsafe_pair_integral_formula({1, 2, R("2/5"), R("3/10")}), R("2/5"));
}

TEST(PairIntegral, HalfThresholdVanishes) {
  for (std::int64_t s1 = 1; s1 <= 6; ++s1) {
    for (std::int64_t s2 = 1; s2 <= 6; ++s2) {
      if (s1 == s2) continue;
      for (auto d : {"1/2", "1/3", "1/7", "5/12"}) {
        EXPECT_EQ(pair_integral_formula({s1, s2, R("1/2"), R(d)}), 0) << s1 << "," << s2 << "," << d;
      }
    }
  }
}

TEST(PairIntegral, RejectsEqualSpeeds) {
  EXPECT_THROW(pair_integral_formula({3, 3, R("1/4"), R("1/4")}), DomainError);
  EXPECT_THROW(unsafe_pair_integral_formula({3, 3, R("1/4"), R("1/4")}), DomainError);
  EXPECT_NO_THROW(pair_integral_oracle({3, 3, R("1/4"), R("1/5")}));
  EXPECT_EQ(pair_integral_oracle({3, 3, R("1/4"), R("1/5")}), R("1/2"));
}

TEST(PairOracle, Examples) {
  EXPECT_EQ(pair_integral_oracle({1, 2, R("1/4"), R("1/4")}), R("1/4"));
  EXPECT_EQ(pair_integral_oracle({2, 4, R("1/4"), R("1/4")}), R("1/4"));
  EXPECT_EQ(pair_integral_oracle({1, 2, R("1/2"), R("1/2")}), R("0"));
}

// Both sides against an integral built from pointwise midpoint values between jumps.
TEST(PairOracle, AgreesWithPiecewiseIntegration) {
  const auto deltas = thresholds_up_to(8);
  for (std::int64_t s1 = 1; s1 <= 7; ++s1) {
    for (std::int64_t s2 = 1; s2 <= 7; ++s2) {
      for (const auto& d1 : deltas) {
        for (const auto& d2 : deltas) {
          const auto bps = oracle::jumps({{s1, d1}, {s2, d2}});
          const Rational ref = oracle::piecewise_integral(
              bps, [&](const Rational& t) { return safe_midpoint(s1, d1, t) * safe_midpoint(s2, d2, t); });
          ASSERT_EQ(pair_integral_oracle({s1, s2, d1, d2}), ref);
          if (s1 != s2) {
            ASSERT_EQ(pair_integral_formula({s1, s2, d1, d2}), ref) << s1 << s2 << d1 << d2;
          }
        }
      }
    }
  }
}

TEST(PairOracle, ScaleInvariance) {
  const auto deltas = thresholds_up_to(7);
  for (std::int64_t s1 = 1; s1 <= 5; ++s1) {
    for (std::int64_t s2 = 1; s2 <= 5; ++s2) {
      for (const auto& d1 : deltas) {
        for (const auto& d2 : deltas) {
          const Rational base = pair_integral_oracle({s1, s2, d1, d2});
          for (std::int64_t g = 2; g <= 5; ++g) ASSERT_EQ(pair_integral_oracle({g * s1, g * s2, d1, d2}), base);
        }
      }
    }
  }
}

TEST(VerificationGrids, SmallCorollaryAndPairGrids) {
  auto c = verify_corollary_grid(6, 8, 3, 11);
  EXPECT_TRUE(c.passed()) << c.first_failure.value_or("");
  EXPECT_GT(c.branches["cd-in-1-2"], 0u);
  EXPECT_GT(c.branches["cd-above-2"], 0u);
  auto p = verify_pair_integral_grid(6, 6);
  EXPECT_TRUE(p.passed()) << p.first_failure.value_or("");
}

TEST(VerificationGrids, ThresholdEnumeration) {
  auto d = thresholds_up_to(4);
  std::vector<Rational> expected{R("1/4"), R("1/3"), R("1/2")};
  EXPECT_EQ(d, expected);
}

}  // namespace
}  // namespace mlr
