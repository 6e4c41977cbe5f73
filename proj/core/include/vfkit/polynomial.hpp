#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vfkit/rational.hpp"

namespace vfkit {

/// Ordered variable names of a polynomial ring.
///
/// Layout is fixed: projective variables first, then parameter variables,
/// then internal auxiliary variables (used by the Rabinowitsch extension).
/// Parameters behave as transcendental constants: they have degree 0 for
/// homogeneity and are never differentiated by derivations.
class VarContext {
public:
  /// Throws DomainError if names repeat or fewer than two projective
  /// variables are given.
  VarContext(std::vector<std::string> projective, std::vector<std::string> parameters = {});

  /// Projective variables x0..x{count-1}.
  static VarContext standard(std::size_t count, std::vector<std::string> parameters = {});

  std::size_t size() const noexcept { return data_->names.size(); }
  std::size_t num_projective() const noexcept { return data_->num_projective; }
  std::size_t num_parameters() const noexcept { return data_->num_parameters; }
  std::size_t num_auxiliary() const noexcept {
    return size() - num_projective() - num_parameters();
  }

  bool is_projective(std::size_t index) const noexcept { return index < num_projective(); }
  bool is_parameter(std::size_t index) const noexcept {
    return index >= num_projective() && index < num_projective() + num_parameters();
  }

  const std::string& name(std::size_t index) const { return data_->names.at(index); }
  std::span<const std::string> names() const noexcept { return data_->names; }
  std::span<const std::string> projective_names() const noexcept {
    return std::span(data_->names).first(num_projective());
  }
  std::span<const std::string> parameter_names() const noexcept {
    return std::span(data_->names).subspan(num_projective(), num_parameters());
  }

  std::optional<std::size_t> index_of(std::string_view name) const noexcept;
  /// Throws UnknownVariable.
  std::size_t require_index(std::string_view name) const;

  /// Copy of this context with one auxiliary variable appended last.
  VarContext with_auxiliary(std::string name) const;

  /// True when this context equals `other` with zero or more trailing
  /// auxiliary variables removed.
  bool is_prefix_of(const VarContext& other) const noexcept;

  friend bool operator==(const VarContext& a, const VarContext& b) noexcept;

private:
  struct Data {
    std::vector<std::string> names;
    std::size_t num_projective = 0;
    std::size_t num_parameters = 0;
  };
  explicit VarContext(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Dense exponent vector, one entry per variable of a context.
class Monomial {
public:
  using Exponent = std::uint8_t;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  /// The constant monomial over `num_vars` variables.
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  /// Throws DomainError when an exponent exceeds kMaxExponent.
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  /// Sum of exponents over the first `count` variables.
  unsigned degree_of_first(std::size_t count) const noexcept;
  bool is_constant() const noexcept { return degree_ == 0; }

  /// Throws DomainError on exponent overflow.
  void set(std::size_t i, unsigned exponent);

  bool divides(const Monomial& other) const noexcept;
  /// Throws DomainError on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  /// Copy padded with zero exponents up to `num_vars` entries.
  Monomial extended(std::size_t num_vars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }
  std::size_t hash() const noexcept;

private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic comparison, x0 > x1 > ... > last variable.
/// Returns negative, zero or positive like strcmp.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grevlex_compare(a, b) > 0;
  }
};

/// Sparse polynomial over the rationals in a fixed VarContext.
///
/// Terms are kept sorted descending in grevlex order with no zero
/// coefficients; the zero polynomial has no terms. Values are immutable
/// from the outside.
class Polynomial {
public:
  using Term = std::pair<Monomial, Rational>;

  /// The zero polynomial.
  explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(VarContext ctx, const Rational& value);
  static Polynomial variable(VarContext ctx, std::string_view name);
  static Polynomial variable(VarContext ctx, std::size_t index);
  static Polynomial monomial(VarContext ctx, Monomial m, Rational coefficient = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(VarContext ctx, std::vector<Term> terms);

  const VarContext& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant value; requires is_constant().
  Rational constant_value() const;

  /// Leading term in the monomial order; requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coefficient() const { return terms_.front().second; }

  /// Highest total degree over all variables; 0 for the zero polynomial.
  unsigned total_degree() const noexcept;
  bool has_parameters() const noexcept;
  /// True when no projective or auxiliary variable occurs.
  bool is_parameter_only() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  Polynomial scaled(const Rational& factor) const;
  Polynomial mul_term(const Monomial& m, const Rational& coefficient) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Everything but the leading term; requires a nonzero polynomial.
  Polynomial tail() const;

  /// Same polynomial viewed in a context that extends this one by
  /// auxiliary variables. Throws ContextMismatch otherwise.
  Polynomial embed(const VarContext& extended) const;
  /// Inverse of embed; throws DomainError if a dropped variable occurs.
  Polynomial restrict_to(const VarContext& prefix) const;

  /// Canonical text form, e.g. `x0^2 + x1^2 + x2^2 + x3*x4`.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  Polynomial(VarContext ctx, std::vector<Term> sorted_terms)
      : ctx_(std::move(ctx)), terms_(std::move(sorted_terms)) {}
  void require_same_context(const Polynomial& other) const;

  VarContext ctx_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Formal partial derivative. Throws UnknownVariable.
Polynomial partial_derivative(const Polynomial& p, std::string_view var);
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

/// Coefficient of the projective monomial `m` in `p`: a polynomial in the
/// parameter variables (zero if absent). Throws DomainError if `m` involves
/// a non-projective variable or has the wrong length.
Polynomial coefficient_of(const Polynomial& p, const Monomial& m);

/// Result of a homogeneity query on projective degree.
struct Homogeneity {
  enum class Kind { NotHomogeneous, Degree, AnyDegree };
  Kind kind = Kind::NotHomogeneous;
  unsigned degree = 0;  // meaningful for Kind::Degree only

  bool homogeneous() const noexcept { return kind != Kind::NotHomogeneous; }
};

/// Projective-degree homogeneity; parameters count as degree 0 and the zero
/// polynomial is homogeneous of every degree.
Homogeneity is_homogeneous(const Polynomial& p);

/// Exact evaluation at a full assignment. Throws DomainError naming the
/// first unassigned variable.
Rational evaluate(const Polynomial& p, const std::map<std::string, Rational, std::less<>>& point);

/// Substitutes values for the projective variables only; parameters stay
/// symbolic. `point` has one entry per projective variable.
Polynomial evaluate_projective(const Polynomial& p, std::span<const Rational> point);

/// All projective monomials of degree `degree`, sorted descending.
std::vector<Monomial> projective_monomials(const VarContext& ctx, unsigned degree);

/// Projective monomial from an exponent list over the projective variables.
Monomial projective_monomial(const VarContext& ctx, std::span<const unsigned> exponents);

/// Text form of a monomial (`1` for the constant monomial).
std::string monomial_to_string(const VarContext& ctx, const Monomial& m);

}  // namespace vfkit

template <>
struct std::hash<vfkit::Monomial> {
  std::size_t operator()(const vfkit::Monomial& m) const noexcept { return m.hash(); }
};
