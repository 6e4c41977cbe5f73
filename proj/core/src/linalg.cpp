#include "vfkit/linalg.hpp"

#include <algorithm>
#include <set>

#include "vfkit/errors.hpp"

namespace vfkit {

// ----------------------------------------------------------------- RatMatrix

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RatMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v.is_zero(); });
}

std::vector<std::vector<Rational>> RatMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimensions do not agree");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimensions do not agree");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
  return a;
}

RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimensions do not agree");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
  return a;
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
  RatMatrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

std::vector<Rational> RatMatrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match matrix");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

// ------------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

UniPoly UniPoly::deflate(const Rational& root) const {
  if (coeffs_.size() <= 1) throw DomainError("cannot deflate a constant");
  // Synthetic division by (t - root).
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = carry * root + coeffs_[i];
    q[i - 1] = carry;
  }
  if (!(carry * root + coeffs_[0]).is_zero()) throw DomainError("deflation by a non-root");
  return UniPoly(std::move(q));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    Rational mag = c.abs();
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// --------------------------------------------------------------- algorithms

RrefResult rref(const RatMatrix& input) {
  RrefResult result{input, 0, {}};
  RatMatrix& m = result.matrix;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    result.pivot_columns.push_back(col);
    ++row;
  }
  result.rank = row;
  return result;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) {
      v[r.pivot_columns[k]] = -r.matrix(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

UniPoly char_poly(const RatMatrix& a) {
  if (!a.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // c[k] is the coefficient of t^k; c[n] = 1.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);  // M_0 = 0
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + id.scaled(c[n - k + 1]);
    RatMatrix amk = a * mk;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / Rational(static_cast<std::int64_t>(k));
  }
  return UniPoly(std::move(c));
}

RatMatrix evaluate_at_matrix(const UniPoly& p, const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("matrix must be square");
  const std::size_t n = m.rows();
  RatMatrix acc(n, n);
  const auto& c = p.coefficients();
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * m + id.scaled(c[i]);
  return acc;
}

namespace {

constexpr std::uint64_t kMaxTrialDivisions = 10'000'000;

std::vector<BigInt> positive_divisors(const BigInt& value) {
  BigInt mag = value.abs();
  if (mag.bit_length() > 62) {
    throw ResourceLimitExceeded("coefficient " + value.to_string() + " too large for rational-root search");
  }
  auto n = static_cast<std::uint64_t>(*mag.to_int64());
  std::set<std::uint64_t> divs;
  std::uint64_t steps = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (++steps > kMaxTrialDivisions) {
      throw ResourceLimitExceeded("divisor enumeration of " + value.to_string() + " exceeds step limit");
    }
    if (n % d == 0) {
      divs.insert(d);
      divs.insert(n / d);
    }
  }
  std::vector<BigInt> out;
  for (auto d : divs) out.emplace_back(static_cast<std::int64_t>(d));
  return out;
}

}  // namespace

EigenDecomposition rational_eigen(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("eigen-decomposition of a non-square matrix");
  const std::size_t n = m.rows();
  UniPoly remaining = char_poly(m);

  std::vector<std::pair<Rational, unsigned>> roots;
  unsigned zero_mult = 0;
  while (remaining.degree() > 0 && remaining.coefficients().front().is_zero()) {
    remaining = remaining.deflate(0);
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rational(0), zero_mult);

  if (remaining.degree() > 0) {
    // Scale to integer coefficients.
    BigInt lcm = 1;
    for (const auto& c : remaining.coefficients()) {
      lcm = lcm / BigInt::gcd(lcm, c.den()) * c.den();
    }
    const BigInt lead = (remaining.leading() * Rational(lcm)).num();
    const BigInt constant = (remaining.coefficients().front() * Rational(lcm)).num();
    std::set<Rational> candidates;
    for (const auto& p : positive_divisors(constant)) {
      for (const auto& q : positive_divisors(lead)) {
        candidates.insert(Rational(p, q));
        candidates.insert(Rational(-p, q));
      }
    }
    for (const auto& cand : candidates) {
      unsigned mult = 0;
      while (remaining.degree() > 0 && remaining(cand).is_zero()) {
        remaining = remaining.deflate(cand);
        ++mult;
      }
      if (mult) roots.emplace_back(cand, mult);
    }
  }
  std::sort(roots.begin(), roots.end());

  EigenDecomposition out;
  const RatMatrix id = RatMatrix::identity(n);
  for (const auto& [value, mult] : roots) {
    out.pairs.push_back({value, kernel_basis(m - id.scaled(value)), mult});
  }
  if (!remaining.is_zero()) {
    Rational inv = remaining.leading().inverse();
    std::vector<Rational> monic = remaining.coefficients();
    for (auto& c : monic) c *= inv;
    remaining = UniPoly(std::move(monic));
  }
  out.residual = std::move(remaining);
  return out;
}

}  // namespace vfkit
