#include "mlr/rational.hpp"
#include "mlr/sampling.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

namespace mlr {
namespace {

Rational R(const char* s) { return Rational::parse(s); }

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(R("13/48").str(), "13/48");
  EXPECT_EQ(R("-1/3").str(), "-1/3");
  EXPECT_EQ(R("2").str(), "2");
  EXPECT_EQ(R("6/8").str(), "3/4");
  EXPECT_THROW(R("3/-9"), DomainError);
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a/2", "1.5", " 1/2", "1/2/3", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), DomainError) << bad;
  }
}

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(Integer(4), Integer(-6));
  EXPECT_EQ(r.numerator(), -2);
  EXPECT_EQ(r.denominator(), 3);
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).denominator(), 1);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
}

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(R("1/2") + R("1/3"), R("5/6"));
  EXPECT_EQ(R("1/2") - R("1/3"), R("1/6"));
  EXPECT_EQ(R("2/3") * R("9/4"), R("3/2"));
  EXPECT_EQ(R("2/3") / R("4/9"), R("3/2"));
  EXPECT_THROW(R("1/2") / Rational(0), DomainError);
  EXPECT_LT(R("1/3"), R("1/2"));
  EXPECT_GT(R("-1/3"), R("-1/2"));
  EXPECT_EQ(R("2/4") <=> R("1/2"), std::strong_ordering::equal);
}

TEST(Rational, HugeValuesStayExact) {
  Integer big = 1;
  for (int i = 2; i <= 40; ++i) big *= i;  // 40! overflows 64 bits
  Rational x(big, big + 1);
  EXPECT_EQ(x + Rational(Integer(1), big + 1), Rational(1));
  EXPECT_GT(x.to_double(), 0.999);
}

TEST(Frac, Examples) {
  EXPECT_EQ(frac(R("11/10")), R("1/10"));
  EXPECT_EQ(frac(R("-1/3")), R("2/3"));
  EXPECT_EQ(frac(R("2")), R("0"));
  EXPECT_EQ(frac(R("-2")), R("0"));
  EXPECT_EQ(floor(R("-1/3")), -1);
  EXPECT_EQ(floor(R("7/2")), 3);
}

TEST(CenteredFrac, Examples) {
  EXPECT_EQ(centered_frac(R("2/3")), R("-1/3"));
  EXPECT_EQ(centered_frac(R("1/2")), R("1/2"));
  EXPECT_EQ(centered_frac(R("-1/2")), R("1/2"));
  EXPECT_EQ(centered_frac(R("1")), R("0"));
}

TEST(NearestIntDist, Examples) {
  EXPECT_EQ(nearest_int_dist(R("3/4")), R("1/4"));
  EXPECT_EQ(nearest_int_dist(R("5")), R("0"));
  EXPECT_EQ(nearest_int_dist(R("7/10")), R("3/10"));
  EXPECT_EQ(nearest_int_dist(R("-7/10")), R("3/10"));
}

TEST(Bernoulli2, Examples) {
  EXPECT_EQ(bernoulli2(R("0")), R("1/6"));
  EXPECT_EQ(bernoulli2(R("1/2")), R("-1/12"));
  // 48 * B2(1/4) = 48/16 - 48/4 + 8 = -1, evaluated here in integers.
  EXPECT_EQ(48 / 16 - 48 / 4 + 8, -1);
  EXPECT_EQ(bernoulli2(R("1/4")), R("-1/48"));
}

TEST(Sign, Examples) {
  EXPECT_EQ(sign(R("-1/3")), -1);
  EXPECT_EQ(sign(R("0")), 0);
  EXPECT_EQ(sign(R("1/2")), 1);
}

TEST(Rational, FractionalPartProperties) {
  RationalSampler sampler(17);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = sampler.next_time(500, -5, 5);
    const Rational f = frac(x);
    const Rational c = centered_frac(x);
    ASSERT_GE(f, 0);
    ASSERT_LT(f, 1);
    ASSERT_GT(c, Rational(-1, 2));
    ASSERT_LE(c, Rational(1, 2));
    ASSERT_EQ(nearest_int_dist(x), abs(c));
    const Rational gap = f - c;
    ASSERT_TRUE(gap == 0 || gap == 1) << x;
    ASSERT_TRUE((x - f).is_integer());
    ASSERT_EQ(bernoulli2(x), bernoulli2(1 - x));
    ASSERT_GT(f.denominator(), 0);
    ASSERT_EQ(boost::multiprecision::gcd(f.numerator(), f.denominator()), f.numerator() == 0 ? f.denominator() : 1);
  }
}

TEST(Rational, HashAgreesWithEquality) {
  std::unordered_set<Rational> set{R("1/2"), R("2/4"), R("-1/2"), R("3/6")};
  EXPECT_EQ(set.size(), 2u);
}

}  // namespace
}  // namespace mlr
