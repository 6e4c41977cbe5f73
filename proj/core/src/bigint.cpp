#include "vfkit/bigint.hpp"

#include <algorithm>
#include <bit>

#include "vfkit/errors.hpp"

namespace vfkit {

namespace {

using Limb = BigInt::Limb;
using Wide = std::uint64_t;
constexpr int kLimbBits = 32;

// Divides the magnitude in place by a single limb and returns the remainder.
Limb div_small(std::vector<Limb>& mag, Limb divisor) {
  Wide rem = 0;
  for (std::size_t i = mag.size(); i-- > 0;) {
    Wide cur = (rem << kLimbBits) | mag[i];
    mag[i] = static_cast<Limb>(cur / divisor);
    rem = cur % divisor;
  }
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  return static_cast<Limb>(rem);
}

}  // namespace

BigInt::BigInt(std::int64_t value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // Negate in unsigned arithmetic so INT64_MIN is handled.
  Wide mag = value < 0 ? Wide(0) - static_cast<Wide>(value) : static_cast<Wide>(value);
  mag_.push_back(static_cast<Limb>(mag));
  if (mag >> kLimbBits) mag_.push_back(static_cast<Limb>(mag >> kLimbBits));
}

BigInt BigInt::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  if (pos == text.size()) throw ParseError("expected digits", pos);
  BigInt result;
  // Consume nine decimal digits at a time.
  while (pos < text.size()) {
    Limb chunk = 0;
    Limb scale = 1;
    for (int k = 0; k < 9 && pos < text.size(); ++k, ++pos) {
      char ch = text[pos];
      if (ch < '0' || ch > '9') throw ParseError("invalid digit", pos);
      chunk = chunk * 10 + static_cast<Limb>(ch - '0');
      scale *= 10;
    }
    // result = result * scale + chunk, on the magnitude directly.
    Wide carry = chunk;
    for (Limb& limb : result.mag_) {
      Wide cur = static_cast<Wide>(limb) * scale + carry;
      limb = static_cast<Limb>(cur);
      carry = cur >> kLimbBits;
    }
    if (carry) result.mag_.push_back(static_cast<Limb>(carry));
  }
  result.trim();
  if (!result.mag_.empty()) result.sign_ = negative ? -1 : 1;
  return result;
}

std::size_t BigInt::bit_length() const noexcept {
  if (mag_.empty()) return 0;
  return (mag_.size() - 1) * kLimbBits + (kLimbBits - std::countl_zero(mag_.back()));
}

std::optional<std::int64_t> BigInt::to_int64() const noexcept {
  if (mag_.size() > 2) return std::nullopt;
  Wide mag = 0;
  if (!mag_.empty()) mag = mag_[0];
  if (mag_.size() == 2) mag |= static_cast<Wide>(mag_[1]) << kLimbBits;
  if (sign_ >= 0) {
    if (mag > static_cast<Wide>(INT64_MAX)) return std::nullopt;
    return static_cast<std::int64_t>(mag);
  }
  if (mag > static_cast<Wide>(INT64_MAX) + 1) return std::nullopt;
  return static_cast<std::int64_t>(Wide(0) - mag);
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<Limb> work = mag_;
  std::vector<Limb> chunks;
  while (!work.empty()) chunks.push_back(div_small(work, 1000000000));
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(9 - part.size(), '0');
    out += part;
  }
  return out;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

int BigInt::compare_magnitude(const std::vector<Limb>& a, const std::vector<Limb>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_magnitude(std::vector<Limb>& a, const std::vector<Limb>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  Wide carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Wide cur = static_cast<Wide>(a[i]) + (i < b.size() ? b[i] : 0) + carry;
    a[i] = static_cast<Limb>(cur);
    carry = cur >> kLimbBits;
    if (!carry && i >= b.size()) break;
  }
  if (carry) a.push_back(static_cast<Limb>(carry));
}

void BigInt::sub_magnitude(std::vector<Limb>& a, const std::vector<Limb>& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
    borrow = cur < 0 ? 1 : 0;
    if (cur < 0) cur += static_cast<std::int64_t>(1) << kLimbBits;
    a[i] = static_cast<Limb>(cur);
    if (!borrow && i >= b.size()) break;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Limb> BigInt::mul_magnitude(const std::vector<Limb>& a, const std::vector<Limb>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Limb> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Wide carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      Wide cur = static_cast<Wide>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<Limb>(cur);
      carry = cur >> kLimbBits;
    }
    out[i + b.size()] = static_cast<Limb>(carry);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth, TAOCP vol. 2, Algorithm D.
void BigInt::divmod_magnitude(const std::vector<Limb>& a, const std::vector<Limb>& b,
                              std::vector<Limb>& quotient, std::vector<Limb>& remainder) {
  if (compare_magnitude(a, b) < 0) {
    quotient.clear();
    remainder = a;
    return;
  }
  if (b.size() == 1) {
    quotient = a;
    Limb r = div_small(quotient, b[0]);
    remainder.clear();
    if (r) remainder.push_back(r);
    return;
  }
  const int shift = std::countl_zero(b.back());
  auto shifted = [shift](const std::vector<Limb>& v, bool extra) {
    std::vector<Limb> out(v.size() + (extra ? 1 : 0), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      Wide cur = static_cast<Wide>(v[i]) << shift;
      out[i] |= static_cast<Limb>(cur);
      if (i + 1 < out.size()) out[i + 1] |= static_cast<Limb>(cur >> kLimbBits);
    }
    return out;
  };
  std::vector<Limb> u = shifted(a, true);
  const std::vector<Limb> v = shifted(b, false);
  const std::size_t n = v.size();
  const std::size_t m = a.size() - n;
  quotient.assign(m + 1, 0);
  const Wide base = Wide(1) << kLimbBits;

  for (std::size_t j = m + 1; j-- > 0;) {
    Wide numerator = (static_cast<Wide>(u[j + n]) << kLimbBits) | u[j + n - 1];
    Wide qhat = numerator / v[n - 1];
    Wide rhat = numerator % v[n - 1];
    while (qhat >= base || qhat * v[n - 2] > ((rhat << kLimbBits) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= base) break;
    }
    // Multiply and subtract qhat * v from u[j .. j+n].
    std::int64_t borrow = 0;
    Wide carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Wide product = qhat * v[i] + carry;
      carry = product >> kLimbBits;
      std::int64_t t = static_cast<std::int64_t>(u[i + j]) - borrow -
                       static_cast<std::int64_t>(product & 0xffffffffu);
      u[i + j] = static_cast<Limb>(t);
      borrow = t < 0 ? 1 : 0;
    }
    std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow - static_cast<std::int64_t>(carry);
    u[j + n] = static_cast<Limb>(t);
    if (t < 0) {
      // qhat was one too large; add v back.
      --qhat;
      Wide c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Wide s = static_cast<Wide>(u[i + j]) + v[i] + c;
        u[i + j] = static_cast<Limb>(s);
        c = s >> kLimbBits;
      }
      u[j + n] = static_cast<Limb>(static_cast<Wide>(u[j + n]) + c);
    }
    quotient[j] = static_cast<Limb>(qhat);
  }
  while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();

  remainder.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Wide lo = static_cast<Wide>(u[i]) >> shift;
    Wide hi = shift ? (static_cast<Wide>(u[i + 1]) << (kLimbBits - shift)) : 0;
    remainder[i] = static_cast<Limb>(lo | hi);
  }
  while (!remainder.empty() && remainder.back() == 0) remainder.pop_back();
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (sign_ == rhs.sign_) {
    add_magnitude(mag_, rhs.mag_);
    return *this;
  }
  int cmp = compare_magnitude(mag_, rhs.mag_);
  if (cmp == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (cmp > 0) {
    sub_magnitude(mag_, rhs.mag_);
  } else {
    std::vector<Limb> tmp = rhs.mag_;
    sub_magnitude(tmp, mag_);
    mag_ = std::move(tmp);
    sign_ = rhs.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt r;
  if (lhs.sign_ == 0 || rhs.sign_ == 0) return r;
  r.mag_ = BigInt::mul_magnitude(lhs.mag_, rhs.mag_);
  r.sign_ = lhs.sign_ * rhs.sign_;
  return r;
}

BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& dividend, const BigInt& divisor) {
  if (divisor.sign_ == 0) throw DivisionByZero();
  BigInt q, r;
  divmod_magnitude(dividend.mag_, divisor.mag_, q.mag_, r.mag_);
  q.sign_ = q.mag_.empty() ? 0 : dividend.sign_ * divisor.sign_;
  r.sign_ = r.mag_.empty() ? 0 : dividend.sign_;
  return {std::move(q), std::move(r)};
}

BigInt& BigInt::operator/=(const BigInt& rhs) { return *this = divmod(*this, rhs).first; }

BigInt& BigInt::operator%=(const BigInt& rhs) { return *this = divmod(*this, rhs).second; }

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
  if (lhs.sign_ != rhs.sign_) return lhs.sign_ <=> rhs.sign_;
  int cmp = BigInt::compare_magnitude(lhs.mag_, rhs.mag_);
  if (lhs.sign_ < 0) cmp = -cmp;
  return cmp <=> 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    // Single-word fast path once both operands are small.
    if (a.bit_length() < 64 && b.bit_length() < 64) {
      auto x = static_cast<Wide>(*a.to_int64());
      auto y = static_cast<Wide>(*b.to_int64());
      while (y) {
        Wide t = x % y;
        x = y;
        y = t;
      }
      return BigInt(static_cast<std::int64_t>(x));
    }
    BigInt r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::size_t BigInt::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(sign_ + 1);
  for (Limb limb : mag_) h = h * 1000003u ^ limb;
  return h;
}

}  // namespace vfkit
