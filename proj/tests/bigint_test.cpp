#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vfkit/bigint.hpp"
#include "vfkit/errors.hpp"

namespace vfkit {
namespace {

using test::random_bigint;

TEST(BigInt, ZeroIsCanonical) {
  BigInt z;
  EXPECT_EQ(z.sign(), 0);
  EXPECT_TRUE(z.limbs().empty());
  EXPECT_EQ(BigInt(5) - BigInt(5), z);
  EXPECT_EQ(BigInt::parse("-0"), z);
  EXPECT_EQ(BigInt::parse("000"), z);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(BigInt, ParseAndPrint) {
  const char* samples[] = {"1", "-1", "4294967295", "4294967296", "-18446744073709551616",
                           "123456789012345678901234567890123456789"};
  for (const char* s : samples) EXPECT_EQ(BigInt::parse(s).to_string(), s);
  EXPECT_EQ(BigInt::parse("0042").to_string(), "42");
}

TEST(BigInt, ParseRejectsGarbage) {
  EXPECT_THROW(BigInt::parse(""), ParseError);
  EXPECT_THROW(BigInt::parse("-"), ParseError);
  EXPECT_THROW(BigInt::parse("12a"), ParseError);
  EXPECT_THROW(BigInt::parse("+3"), ParseError);
}

TEST(BigInt, Int64Extremes) {
  const BigInt min(INT64_MIN), max(INT64_MAX);
  EXPECT_EQ(min.to_string(), "-9223372036854775808");
  EXPECT_EQ(max.to_string(), "9223372036854775807");
  EXPECT_EQ(min.to_int64(), INT64_MIN);
  EXPECT_EQ(max.to_int64(), INT64_MAX);
  EXPECT_FALSE((max + 1).to_int64().has_value());
  EXPECT_FALSE((min - 1).to_int64().has_value());
  EXPECT_EQ((max + 1).to_string(), "9223372036854775808");
}

TEST(BigInt, MultiplyCarries) {
  const BigInt a = BigInt::parse("4294967295");
  EXPECT_EQ((a * a).to_string(), "18446744065119617025");
  const BigInt big = BigInt::parse("340282366920938463463374607431768211456");  // 2^128
  EXPECT_EQ((big * big).to_string(), "115792089237316195423570985008687907853269984665640564039457584007913129639936");
  EXPECT_EQ((big * BigInt(-1)).sign(), -1);
}

TEST(BigInt, DivisionTruncatesTowardZero) {
  EXPECT_EQ(BigInt(7) / BigInt(2), BigInt(3));
  EXPECT_EQ(BigInt(-7) / BigInt(2), BigInt(-3));
  EXPECT_EQ(BigInt(-7) % BigInt(2), BigInt(-1));
  EXPECT_EQ(BigInt(7) % BigInt(-2), BigInt(1));
  EXPECT_THROW(BigInt(1) / BigInt(0), DivisionByZero);
}

TEST(BigInt, LongDivisionNeedsCorrection) {
  // Exercises the add-back step of schoolbook division.
  const BigInt a = BigInt::parse("340282366920938463463374607431768211455");
  const BigInt b = BigInt::parse("18446744073709551617");
  auto [q, r] = BigInt::divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r, b);
  EXPECT_EQ(q.to_string(), "18446744073709551615");
}

TEST(BigInt, Gcd) {
  EXPECT_EQ(BigInt::gcd(0, 0), BigInt(0));
  EXPECT_EQ(BigInt::gcd(0, -5), BigInt(5));
  EXPECT_EQ(BigInt::gcd(-12, 18), BigInt(6));
  const BigInt p = BigInt::parse("170141183460469231731687303715884105727");  // 2^127 - 1
  EXPECT_EQ(BigInt::gcd(p * 6, p * 35), p);
}

TEST(BigInt, Ordering) {
  EXPECT_LT(BigInt(-3), BigInt(2));
  EXPECT_LT(BigInt::parse("-100000000000000000000"), BigInt(-1));
  EXPECT_GT(BigInt::parse("100000000000000000000"), BigInt(INT64_MAX));
}

TEST(BigIntProperty, RingAxiomsAndDivision) {
  test::Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const BigInt a = random_bigint(rng), b = random_bigint(rng), c = random_bigint(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a - a, BigInt());
    ASSERT_EQ(BigInt::parse(a.to_string()), a);
    if (!b.is_zero()) {
      auto [q, r] = BigInt::divmod(a, b);
      ASSERT_EQ(q * b + r, a);
      ASSERT_LT(r.abs(), b.abs());
      ASSERT_TRUE(r.is_zero() || r.sign() == a.sign());
    }
    const BigInt g = BigInt::gcd(a, b);
    if (!g.is_zero()) {
      ASSERT_TRUE((a % g).is_zero());
      ASSERT_TRUE((b % g).is_zero());
      ASSERT_EQ(BigInt::gcd(a / g, b / g), BigInt(1));
    }
  }
}

}  // namespace
}  // namespace vfkit
