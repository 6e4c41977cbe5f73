#pragma once

// Brute-force reference routes used to cross-check the Gröbner and
// stabilizer code. Nothing here calls into ideal.hpp, linalg.hpp,
// derivation.hpp or analysis.hpp; only the coefficient field and plain
// polynomial arithmetic are shared.

#include <span>
#include <vector>

#include "vfkit/polynomial.hpp"

namespace vfkit::oracle {

/// Rank of a dense rational matrix by straightforward Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> rows);

/// f lies in the span of { m * g : g in gens, deg(m * g) <= bound }.
bool member_up_to_degree(const Polynomial& f, std::span<const Polynomial> gens, unsigned bound);

/// Degree-truncated ideal membership: raises the bound from max(deg f,
/// max deg g) by one until membership is found or `extra` further bounds
/// have been tried. Exact for homogeneous generators.
bool member_by_linear_algebra(const Polynomial& f, std::span<const Polynomial> gens, unsigned extra = 1);

/// Dimension of {(A, lambda) : sum_ij a_ij x_i dh/dx_j = lambda h}, from the
/// rank of the coefficient-matching system in (n+1)^2 + 1 unknowns.
std::size_t stabilizer_dimension(const Polynomial& h);

}  // namespace vfkit::oracle
