#include <gtest/gtest.h>

#include "olson/rational.hpp"

namespace olson {
namespace {

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 4) + Rational(2, 4), Rational(3, 4));
  EXPECT_EQ(Rational(1) - Rational(1, 3), Rational(2, 3));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(midpoint(Rational(0), Rational(1)), Rational(1, 2));
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("0.3"), Rational(3, 10));
  EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, OverflowThrowsInsteadOfWrapping) {
  Rational big(INT64_MAX);
  EXPECT_THROW(big + Rational(1), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

}  // namespace
}  // namespace olson
