#include <gtest/gtest.h>

#include <unordered_set>

#include "test_support.hpp"
#include "vfkit/errors.hpp"
#include "vfkit/rational.hpp"

namespace vfkit {
namespace {

using test::rat;

TEST(Rational, Addition) {
  EXPECT_EQ(rat("1/2") + rat("1/3"), rat("5/6"));
  EXPECT_EQ(rat_add(rat("3/7"), Rational()), rat("3/7"));
  const Rational z = rat("1/2") + rat("-1/2");
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), BigInt(1));
}

TEST(Rational, Multiplication) {
  EXPECT_EQ(rat("2/3") * rat("3/4"), rat("1/2"));
  EXPECT_EQ(rat_mul(rat("5/9"), 1), rat("5/9"));
  EXPECT_TRUE(rat_mul(rat("5/9"), 0).is_zero());
}

TEST(Rational, Inverse) {
  EXPECT_EQ(rat_inv(rat("-2/5")), rat("-5/2"));
  EXPECT_EQ(rat_inv(1), Rational(1));
  EXPECT_EQ(rat_inv(7), rat("1/7"));
  EXPECT_THROW(rat_inv(0), DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(), DivisionByZero);
}

TEST(Rational, CanonicalForm) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), BigInt(-3));
  EXPECT_EQ(r.den(), BigInt(2));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(BigInt(10), BigInt(5)).to_string(), "2");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DivisionByZero);
}

TEST(Rational, Parse) {
  EXPECT_EQ(rat("4/6"), Rational(BigInt(2), BigInt(3)));
  EXPECT_EQ(rat("-12"), Rational(-12));
  EXPECT_THROW(rat("1/0"), DivisionByZero);
  EXPECT_THROW(rat("1/-2"), ParseError);
  EXPECT_THROW(rat("1.5"), ParseError);
  EXPECT_THROW(rat(""), ParseError);
}

TEST(Rational, Ordering) {
  EXPECT_LT(rat("-1/2"), rat("-1/3"));
  EXPECT_LT(rat("1/3"), rat("1/2"));
  EXPECT_EQ(rat("2/4") <=> rat("1/2"), std::strong_ordering::equal);
}

TEST(Rational, OverflowPastInt64) {
  Rational x(BigInt(INT64_MAX));
  x = x * x + Rational(1) / Rational(BigInt(INT64_MAX));
  EXPECT_EQ((x - x).to_string(), "0");
  EXPECT_EQ(x * x.inverse(), Rational(1));
}

TEST(RationalProperty, FieldAxioms) {
  test::Rng rng(7);
  for (int k = 0; k < 400; ++k) {
    const Rational x = test::random_rational(rng, 1000), y = test::random_rational(rng, 1000),
                   z = test::random_rational(rng, 1000);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(Rational::parse(x.to_string()), x);
    if (!x.is_zero()) ASSERT_EQ(x * x.inverse(), Rational(1));
    ASSERT_EQ(BigInt::gcd(x.num(), x.den()), BigInt(1));
    ASSERT_GT(x.den(), BigInt(0));
  }
}

TEST(RationalProperty, EqualValuesHashEqually) {
  std::unordered_set<Rational> seen;
  for (int n = -6; n <= 6; ++n) {
    for (int d = 1; d <= 6; ++d) seen.insert(Rational(BigInt(n * 7), BigInt(d * 7)));
  }
  for (int n = -6; n <= 6; ++n) {
    for (int d = 1; d <= 6; ++d) EXPECT_TRUE(seen.contains(Rational(BigInt(n), BigInt(d))));
  }
}

}  // namespace
}  // namespace vfkit
