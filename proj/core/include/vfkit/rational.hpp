#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "vfkit/bigint.hpp"

namespace vfkit {

/// Exact fraction in canonical form: positive denominator, coprime
/// numerator and denominator, zero stored as 0/1. Every constructor
/// canonicalizes, so two Rationals are equal iff their fields are.
class Rational {
public:
  Rational() : den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero when `den` is zero.
  Rational(BigInt num, BigInt den);

  /// Accepts `p`, `-p`, `p/q` and `-p/q`. Throws ParseError.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }

  /// Throws DivisionByZero on zero.
  Rational inverse() const;
  Rational abs() const { return {num_.abs(), den_, Canonical{}}; }
  Rational operator-() const { return {-num_, den_, Canonical{}}; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// `p` when the denominator is 1, otherwise `p/q`.
  std::string to_string() const;
  std::size_t hash() const noexcept { return num_.hash() * 31u ^ den_.hash(); }

private:
  struct Canonical {};
  Rational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

Rational rat_add(const Rational& x, const Rational& y);
Rational rat_mul(const Rational& x, const Rational& y);
/// Throws DivisionByZero on x = 0.
Rational rat_inv(const Rational& x);

}  // namespace vfkit

template <>
struct std::hash<vfkit::Rational> {
  std::size_t operator()(const vfkit::Rational& value) const noexcept { return value.hash(); }
};
