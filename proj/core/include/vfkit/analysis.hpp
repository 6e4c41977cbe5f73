#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vfkit/derivation.hpp"
#include "vfkit/errors.hpp"
#include "vfkit/ideal.hpp"
#include "vfkit/linalg.hpp"
#include "vfkit/polynomial.hpp"

namespace vfkit {

// ------------------------------------------------------------ stabilizers

struct StabilizerPair {
  RatMatrix matrix;
  Rational lambda;
};

/// Basis of {(A, lambda) : D_A h = lambda * h}.
struct StabilizerSolution {
  std::vector<StabilizerPair> basis;
  std::size_t dimension = 0;
};

/// Solves the linear system in the (n+1)^2 + 1 unknowns (a_ij, lambda)
/// obtained by equating every monomial coefficient of D_A h - lambda*h to
/// zero. Throws DomainError unless h is homogeneous, parameter-free and of
/// degree >= 1.
StabilizerSolution stabilizer_algebra(const Polynomial& h);

/// True when (identity, deg h) lies in the span of the solution.
bool contains_euler_pair(const StabilizerSolution& solution, unsigned degree);

// ----------------------------------------------------- structured matrix

/// Derivation on five projective variables that is zero except a_33 = 1
/// and last row (star_0, star_1, star_2, star_3, a). `ctx` must have five
/// projective variables and the entries must be parameter polynomials in it.
Derivation structured_matrix(const VarContext& ctx, const std::array<Polynomial, 4>& star, const Polynomial& a);
/// Numeric variant over x0..x4.
Derivation structured_matrix(const std::array<Rational, 4>& star, const Rational& a);

// ------------------------------------------------------------- cone shape

/// Decomposition h = f(x0, x1, x2) + x4 * g of a quintic-space hypersurface.
struct ConeShape {
  Polynomial f;
  Polynomial g;
  /// Coefficient of x3^(d-1) in g.
  Rational coeff_x3_top;
  /// Coefficients of x_i * x4^(d-1) in h for i = 0..4.
  std::array<Rational, 5> coeff_xi_x4_top;

  bool x3_top_nonzero() const noexcept { return !coeff_x3_top.is_zero(); }
  bool some_xi_x4_top_nonzero() const noexcept;
};

/// Raised when h has a monomial containing x3 but not x4.
class ConeShapeError : public DomainError {
public:
  ConeShapeError(const std::string& message, Monomial offending)
      : DomainError(message), offending_(std::move(offending)) {}
  const Monomial& offending() const noexcept { return offending_; }

private:
  Monomial offending_;
};

/// Throws DomainError for inputs outside the preconditions (five
/// projective variables, homogeneous, parameter-free, degree >= 1) and
/// ConeShapeError if the decomposition does not exist.
ConeShape cone_shape(const Polynomial& h);

// ---------------------------------------------------- coefficient identity

struct CoefficientIdentityReport {
  unsigned degree = 0;
  /// Generic cone-shaped h with leading coefficient c on x3^(d-1)*x4.
  Polynomial h_generic;
  /// Structured derivation with symbolic last row (s0, s1, s2, s3, a).
  Derivation d_structured;
  Polynomial top_coefficient;           // of x3^(d-1)*x4 in D h
  Polynomial top_expected;              // c*(d - 1 + a)
  Polynomial bottom_coefficient;        // of x3*x4^(d-1) in D' (c*x3*x4^(d-1))
  Polynomial bottom_expected;           // c*(1 - (d-1)^2)
  bool top_holds = false;
  bool bottom_holds = false;

  bool holds() const noexcept { return top_holds && bottom_holds; }
};

/// Throws DomainError unless degree is 2, 3 or 4.
CoefficientIdentityReport coefficient_identity(unsigned degree);

// --------------------------------------------------------- nonexistence

struct NonexistenceCertificate {
  unsigned degree = 0;
  /// diag(0, 0, 0, 1, 1 - d).
  Derivation derivation;
  std::vector<Monomial> weight_zero;
  /// Weights of x_i * x4^(d-1), i = 0..4 (x4^d for i = 4).
  std::array<Rational, 5> top_weights;
  bool no_top_monomial_invariant = false;
  /// sum p_k m_k over weight_zero monomials, one parameter p_k each.
  Polynomial generic_invariant;
  Polynomial value_at_vertex;                  // h(0:0:0:0:1)
  std::vector<Polynomial> gradient_at_vertex;  // grad h at (0:0:0:0:1)
  bool singular_at_vertex = false;

  bool valid() const noexcept { return no_top_monomial_invariant && singular_at_vertex; }
};

/// Throws DomainError unless degree is 3 or 4. Degree 2 is refused
/// because x3*x4 has weight zero there.
NonexistenceCertificate nonexistence_check(unsigned degree);

// --------------------------------------------------- vanishing on a curve

struct VanishingVerdict {
  bool stabilizes = false;
  std::optional<Rational> lambda;
  bool is_euler = false;
  bool smooth = false;
  bool vanishes_on = false;
  /// Machine-readable reasons for each false verdict.
  std::vector<std::string> reasons;

  bool all() const noexcept { return stabilizes && smooth && vanishes_on; }
};

/// Aggregates D h = lambda h, smoothness of {h = 0}, and V(I_C) in Z(D).
VanishingVerdict check_vanishing_on_curve(const Polynomial& h, const Derivation& d, const Ideal& curve,
                                          Containment mode = Containment::SetTheoretic,
                                          const GroebnerLimits& limits = {});

// ---------------------------------------------------- index arithmetic

struct DegreeCase {
  int h3 = 0;   // cube of the ample generator
  int d = 0;
  int r_d = 0;  // 4 - h3 * d
  int r_x = 0;  // r_d + d
  std::string verdict;
};

/// All (H^3, d) with H^3 in 1..4, d >= 1 and r_X = 4 - (H^3 - 1) d >= 1;
/// for H^3 = 1 (where r_X does not depend on d) d runs over 1..3.
std::vector<DegreeCase> degree_case_table();

/// g = r^3 * H^3 / 2 + 1. Throws DomainError if r^3 * H^3 is odd or an
/// argument is not positive.
long long fano_genus(long long r, long long h3);

}  // namespace vfkit
