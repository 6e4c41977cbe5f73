#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vfkit/analysis.hpp"
#include "vfkit/oracle.hpp"

namespace vfkit {
namespace {

// Substitutes x -> M x into h.
Polynomial change_coordinates(const Polynomial& h, const RatMatrix& m) {
  const VarContext& ctx = h.context();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ctx.num_projective(); ++i) {
    Polynomial image(ctx);
    for (std::size_t j = 0; j < ctx.num_projective(); ++j) image += Polynomial::variable(ctx, j).scaled(m(i, j));
    images.push_back(std::move(image));
  }
  Polynomial out(ctx);
  for (const auto& [mono, coeff] : h.terms()) {
    Polynomial term = Polynomial::constant(ctx, coeff);
    for (std::size_t i = 0; i < ctx.num_projective(); ++i) {
      for (unsigned e = 0; e < mono[i]; ++e) term *= images[i];
    }
    out += term;
  }
  return out;
}

TEST(StabilizerProperty, InvariantUnderCoordinateChange) {
  const VarContext ctx = VarContext::standard(5);
  const Polynomial quadric = parse_poly("x0^2 + x1^2 + x2^2 + x3*x4", ctx);
  test::Rng rng(41);
  int tested = 0;
  while (tested < 12) {
    const RatMatrix m = test::random_matrix(5, 5, rng, 1);
    if (char_poly(m).coefficients().front().is_zero()) continue;  // singular
    const Polynomial moved = change_coordinates(quadric, m);
    const StabilizerSolution s = stabilizer_algebra(moved);
    ASSERT_EQ(s.dimension, 11u) << moved.to_string();
    ASSERT_EQ(oracle::stabilizer_dimension(moved), 11u);
    ASSERT_TRUE(contains_euler_pair(s, 2));
    ++tested;
  }
}

TEST(StabilizerProperty, BasisPairsStabilize) {
  const VarContext ctx = VarContext::standard(3);
  test::Rng rng(43);
  for (int k = 0; k < 40; ++k) {
    const Polynomial h = test::random_form(ctx, rng, 2 + k % 2, 3);
    if (h.is_zero()) continue;
    const StabilizerSolution s = stabilizer_algebra(h);
    ASSERT_EQ(s.dimension, oracle::stabilizer_dimension(h));
    for (const auto& pair : s.basis) {
      ASSERT_EQ(apply(Derivation::from_rationals(ctx, pair.matrix.to_rows()), h), h.scaled(pair.lambda));
    }
    ASSERT_TRUE(contains_euler_pair(s, h.total_degree()));
  }
}

TEST(NonexistenceProperty, InvariantHypersurfacesAreSingular) {
  test::Rng rng(47);
  for (unsigned d : {3u, 4u}) {
    const NonexistenceCertificate cert = nonexistence_check(d);
    const VarContext ctx = VarContext::standard(5);
    for (int sample = 0; sample < 20; ++sample) {
      std::vector<Polynomial::Term> terms;
      for (const auto& m : cert.weight_zero) terms.emplace_back(m, test::random_rational(rng, 7));
      const Polynomial h = Polynomial::from_terms(ctx, std::move(terms));
      if (h.is_zero()) continue;
      ASSERT_TRUE(apply(cert.derivation, h).is_zero());
      ASSERT_FALSE(is_smooth_projective(h)) << h.to_string();
    }
  }
}

TEST(GenusProperty, AllRows) {
  const long long rows[][3] = {{4, 1, 33}, {3, 2, 28}, {2, 1, 5},  {2, 2, 9},   {2, 3, 13},  {2, 4, 17},
                               {2, 5, 21}, {1, 2, 2},  {1, 4, 3},  {1, 4, 3},   {1, 6, 4},   {1, 8, 5},
                               {1, 10, 6}, {1, 12, 7}, {1, 14, 8}, {1, 16, 9},  {1, 18, 10}, {1, 22, 12}};
  for (const auto& row : rows) EXPECT_EQ(fano_genus(row[0], row[1]), row[2]);
}

}  // namespace
}  // namespace vfkit
