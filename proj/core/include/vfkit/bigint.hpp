#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vfkit {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation with 32-bit little-endian limbs. The
/// magnitude never carries a leading zero limb and zero is the unique value
/// with sign 0 and an empty magnitude, so equality is structural.
class BigInt {
public:
  using Limb = std::uint32_t;

  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses an optional leading '-' followed by decimal digits.
  /// Throws ParseError on anything else.
  static BigInt parse(std::string_view text);

  int sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == 0; }
  bool is_one() const noexcept { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  const std::vector<Limb>& limbs() const noexcept { return mag_; }
  std::size_t bit_length() const noexcept;

  std::optional<std::int64_t> to_int64() const noexcept;
  std::string to_string() const;

  BigInt abs() const;
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  /// Truncating division (rounds toward zero), as for built-in integers.
  BigInt& operator/=(const BigInt& rhs);
  BigInt& operator%=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
  friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

  friend bool operator==(const BigInt&, const BigInt&) = default;
  friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);

  /// Quotient and remainder with truncation toward zero; the remainder takes
  /// the sign of the dividend. Throws DivisionByZero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& dividend, const BigInt& divisor);

  /// Nonnegative greatest common divisor; gcd(0, 0) = 0.
  static BigInt gcd(BigInt a, BigInt b);

  std::size_t hash() const noexcept;

private:
  static int compare_magnitude(const std::vector<Limb>& a, const std::vector<Limb>& b);
  static void add_magnitude(std::vector<Limb>& a, const std::vector<Limb>& b);
  // Requires |a| >= |b|.
  static void sub_magnitude(std::vector<Limb>& a, const std::vector<Limb>& b);
  static std::vector<Limb> mul_magnitude(const std::vector<Limb>& a, const std::vector<Limb>& b);
  static void divmod_magnitude(const std::vector<Limb>& a, const std::vector<Limb>& b,
                               std::vector<Limb>& quotient, std::vector<Limb>& remainder);
  void trim();

  int sign_ = 0;
  std::vector<Limb> mag_;
};

}  // namespace vfkit

template <>
struct std::hash<vfkit::BigInt> {
  std::size_t operator()(const vfkit::BigInt& value) const noexcept { return value.hash(); }
};
