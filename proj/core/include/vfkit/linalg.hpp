#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vfkit/rational.hpp"

namespace vfkit {

/// Dense row-major matrix of Rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DomainError on ragged input.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix transposed() const;
  bool is_zero() const noexcept;
  std::vector<std::vector<Rational>> to_rows() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b);
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b);
  RatMatrix scaled(const Rational& factor) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Dense univariate polynomial, coefficients from constant term upward,
/// without trailing zeros.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  /// Quotient by (t - root); requires root to be a root.
  UniPoly deflate(const Rational& root) const;

  /// Text in the variable `var`, highest power first.
  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
  std::vector<Rational> coeffs_;
};

struct RrefResult {
  RatMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row.
RrefResult rref(const RatMatrix& m);

/// Basis of {v : M v = 0}: one vector per free column, with that free
/// variable set to 1 and the other free variables 0, in column order.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// det(t*I - M) by the Faddeev-LeVerrier recurrence. Throws DomainError
/// if M is not square.
UniPoly char_poly(const RatMatrix& m);

/// Evaluates p at the square matrix M.
RatMatrix evaluate_at_matrix(const UniPoly& p, const RatMatrix& m);

struct EigenPair {
  Rational value;
  std::vector<std::vector<Rational>> eigenspace;
  unsigned algebraic_multiplicity = 0;
};

struct EigenDecomposition {
  /// Sorted by increasing eigenvalue.
  std::vector<EigenPair> pairs;
  /// Monic factor of the characteristic polynomial without rational roots.
  UniPoly residual;
};

/// Rational eigenvalues (exhaustive rational-root search), their
/// eigenspaces, and the leftover characteristic factor. Throws DomainError
/// if M is not square and ResourceLimitExceeded if a coefficient is too
/// large to enumerate its divisors.
EigenDecomposition rational_eigen(const RatMatrix& m);

}  // namespace vfkit
