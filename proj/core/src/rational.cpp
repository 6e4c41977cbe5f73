#include "vfkit/rational.hpp"

#include <numeric>

#include "vfkit/errors.hpp"

namespace vfkit {

namespace {

__extension__ using i128 = __int128;

bool small(const BigInt& v) { return v.bit_length() < 63; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_int64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void Rational::canonicalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_.is_one()) return;
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::parse(text));
  BigInt num;
  try {
    num = BigInt::parse(text.substr(0, slash));
  } catch (const ParseError& e) {
    throw ParseError("invalid rational numerator", e.offset());
  }
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') throw ParseError("negative denominator", slash + 1);
  BigInt den;
  try {
    den = BigInt::parse(den_text);
  } catch (const ParseError& e) {
    throw ParseError("invalid rational denominator", slash + 1 + e.offset());
  }
  return Rational(std::move(num), std::move(den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.sign() < 0) return {-den_, -num_, Canonical{}};
  return {den_, num_, Canonical{}};
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (small(num_) && small(den_) && small(rhs.num_) && small(rhs.den_)) {
    i128 n = i128(*num_.to_int64()) * *rhs.den_.to_int64() + i128(*rhs.num_.to_int64()) * *den_.to_int64();
    i128 d = i128(*den_.to_int64()) * *rhs.den_.to_int64();
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits_int64(n) && fits_int64(d)) {
      num_ = BigInt(static_cast<std::int64_t>(n));
      den_ = BigInt(static_cast<std::int64_t>(d));
      if (num_.is_zero()) den_ = 1;
      return *this;
    }
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Rational();
  if (small(num_) && small(den_) && small(rhs.num_) && small(rhs.den_)) {
    i128 n = i128(*num_.to_int64()) * *rhs.num_.to_int64();
    i128 d = i128(*den_.to_int64()) * *rhs.den_.to_int64();
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits_int64(n) && fits_int64(d)) {
      num_ = BigInt(static_cast<std::int64_t>(n));
      den_ = BigInt(static_cast<std::int64_t>(d));
      return *this;
    }
  }
  // Cross-cancel first to keep intermediate sizes down.
  BigInt g1 = BigInt::gcd(num_, rhs.den_);
  BigInt g2 = BigInt::gcd(rhs.num_, den_);
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational rat_add(const Rational& x, const Rational& y) { return x + y; }
Rational rat_mul(const Rational& x, const Rational& y) { return x * y; }
Rational rat_inv(const Rational& x) { return x.inverse(); }

}  // namespace vfkit
