#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vfkit/derivation.hpp"
#include "vfkit/polynomial.hpp"

namespace vfkit {

/// Ideal given by generators. Zero generators are dropped on construction,
/// so the zero ideal is the one with no generators.
class Ideal {
public:
  /// Throws ContextMismatch if a generator lives in another context.
  Ideal(VarContext ctx, std::vector<Polynomial> generators);

  const VarContext& context() const noexcept { return ctx_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }

private:
  VarContext ctx_;
  std::vector<Polynomial> gens_;
};

/// Guardrails for Gröbner computations. Exceeding one raises
/// ResourceLimitExceeded.
struct GroebnerLimits {
  std::uint64_t max_reduction_steps = 1'000'000;
  std::size_t max_basis_size = 10'000;
};

/// Reduced Gröbner basis for graded reverse lexicographic order: monic
/// elements, no term of one element divisible by another's leading
/// monomial, sorted by descending leading monomial.
struct GroebnerBasis {
  VarContext context;
  std::string order = "grevlex";
  std::vector<Polynomial> basis;

  /// True when the ideal is the whole ring.
  bool is_unit() const noexcept;
};

/// Buchberger's algorithm with normal pair selection (smallest lcm degree
/// first) and both Buchberger criteria. Throws DomainError if a generator
/// involves a parameter variable.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerLimits& limits = {});

/// Remainder of full multivariate division of `f` by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const GroebnerLimits& limits = {});

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits = {});

/// f in the radical of I, decided by 1 in I + (1 - t*f) over the ring
/// extended by an auxiliary variable t.
bool radical_member(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits = {});

/// Ideal (h, dh/dx_0, ..., dh/dx_n).
Ideal jacobian_ideal(const Polynomial& h);

struct SmoothnessReport {
  bool smooth = false;
  /// First projective variable outside the radical of the Jacobian ideal.
  std::optional<std::size_t> singular_witness;
};

/// Jacobian criterion for the hypersurface {h = 0}. Throws DomainError if h
/// is inhomogeneous, of degree 0, zero, or has parameters.
SmoothnessReport check_smooth_projective(const Polynomial& h, const GroebnerLimits& limits = {});
bool is_smooth_projective(const Polynomial& h, const GroebnerLimits& limits = {});

/// Ideal of the 2x2 minors x_i*(A^T x)_j - x_j*(A^T x)_i, i < j, cutting
/// out the zero locus on projective space of the field induced by D.
/// Throws DomainError if D has parameter entries.
Ideal zero_locus_ideal(const Derivation& d);

enum class Containment { SetTheoretic, SchemeTheoretic };

struct VanishingReport {
  bool vanishes = false;
  /// A minor of zero_locus_ideal(D) that is not in (the radical of) I.
  std::optional<Polynomial> witness;
};

/// Whether D vanishes on V(I). Set-theoretic mode tests radical membership
/// of each minor; scheme-theoretic mode tests plain membership.
VanishingReport check_vanishes_on(const Derivation& d, const Ideal& ideal,
                                  Containment mode = Containment::SetTheoretic,
                                  const GroebnerLimits& limits = {});
bool vanishes_on(const Derivation& d, const Ideal& ideal, Containment mode = Containment::SetTheoretic,
                 const GroebnerLimits& limits = {});

}  // namespace vfkit
