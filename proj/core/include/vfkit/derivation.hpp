#pragma once

#include <optional>
#include <vector>

#include "vfkit/polynomial.hpp"

namespace vfkit {

/// Weight-0 derivation D = sum_ij a_ij * x_i * d/dx_j of the homogeneous
/// coordinate ring.
///
/// `entry(i, j)` is a_ij, a polynomial in the parameter variables only. The
/// matrix is square with one row and column per projective variable. Row i
/// multiplies x_i, column j selects the partial derivative, so
/// D(x_j) = sum_i a_ij x_i is the j-th entry of A^T x.
class Derivation {
public:
  /// Zero derivation.
  explicit Derivation(VarContext ctx);
  /// Throws DomainError on wrong shape or entries with projective variables,
  /// ContextMismatch on foreign entries.
  Derivation(VarContext ctx, std::vector<std::vector<Polynomial>> entries);
  /// Numeric entries, row-major.
  static Derivation from_rationals(VarContext ctx, const std::vector<std::vector<Rational>>& entries);
  static Derivation diagonal(VarContext ctx, const std::vector<Rational>& weights);
  /// The Euler field sum_i x_i d/dx_i.
  static Derivation euler(VarContext ctx);

  const VarContext& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return n_; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_diagonal() const noexcept;
  bool is_parameter_free() const noexcept;
  /// Numeric matrix; requires is_parameter_free().
  std::vector<std::vector<Rational>> numeric_entries() const;
  /// Scalar c if D = c * Euler (c may be zero), otherwise nullopt.
  std::optional<Rational> euler_multiple() const;

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

private:
  VarContext ctx_;
  std::size_t n_;
  std::vector<Polynomial> entries_;
};

/// D applied to f. Throws ContextMismatch.
Polynomial apply(const Derivation& d, const Polynomial& f);

/// Representative of D modulo multiples of the Euler field: subtracts the
/// rational part of trace(D)/size from the diagonal.
Derivation euler_reduce(const Derivation& d);

/// Weight sum_i alpha_i * w_i of the projective monomial x^alpha under a
/// diagonal derivation diag(w_0, ..., w_n). Throws DomainError if D is not
/// diagonal.
Polynomial monomial_weight(const Derivation& d, const Monomial& m);

/// Degree-`degree` projective monomials annihilated by a diagonal derivation
/// with rational diagonal, sorted descending.
std::vector<Monomial> weight_zero_monomials(const Derivation& d, unsigned degree);

}  // namespace vfkit
