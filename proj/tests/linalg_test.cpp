#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vfkit/errors.hpp"
#include "vfkit/linalg.hpp"

namespace vfkit {
namespace {

RatMatrix M(const std::vector<std::vector<Rational>>& rows) { return RatMatrix::from_rows(rows); }

RatMatrix diag(const std::vector<Rational>& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

TEST(Rref, Examples) {
  const RrefResult id = rref(RatMatrix::identity(3));
  EXPECT_EQ(id.matrix, RatMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  const RrefResult zero = rref(RatMatrix(3, 3));
  EXPECT_TRUE(zero.matrix.is_zero());
  EXPECT_EQ(zero.rank, 0u);
  const RrefResult r = rref(M({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.matrix, M({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_columns, std::vector<std::size_t>{0});
}

TEST(Rref, RaggedInput) { EXPECT_THROW(M({{1, 2}, {3}}), DomainError); }

TEST(Kernel, Examples) {
  const auto zero = kernel_basis(RatMatrix(3, 3));
  ASSERT_EQ(zero.size(), 3u);
  EXPECT_EQ(zero[0], (std::vector<Rational>{1, 0, 0}));
  EXPECT_EQ(zero[2], (std::vector<Rational>{0, 0, 1}));
  EXPECT_TRUE(kernel_basis(RatMatrix::identity(4)).empty());
  const auto k = kernel_basis(M({{1, 1, 0}}));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (std::vector<Rational>{-1, 1, 0}));
  EXPECT_EQ(k[1], (std::vector<Rational>{0, 0, 1}));
}

TEST(CharPoly, Examples) {
  // t^3 (t - 1)(t + 1) = t^5 - t^3
  EXPECT_EQ(char_poly(diag({0, 0, 0, 1, -1})), UniPoly({0, 0, 0, -1, 0, 1}));
  EXPECT_EQ(char_poly(RatMatrix::identity(2)), UniPoly({1, -2, 1}));
  EXPECT_EQ(char_poly(RatMatrix(4, 4)), UniPoly({0, 0, 0, 0, 1}));
  EXPECT_EQ(char_poly(M({{0, -1}, {1, 0}})).to_string(), "t^2 + 1");
  EXPECT_THROW(char_poly(RatMatrix(2, 3)), DomainError);
}

TEST(Eigen, QuadricField) {
  const EigenDecomposition e = rational_eigen(diag({0, 0, 0, 1, -1}));
  ASSERT_EQ(e.pairs.size(), 3u);
  EXPECT_EQ(e.pairs[0].value, Rational(-1));
  EXPECT_EQ(e.pairs[0].eigenspace, (std::vector<std::vector<Rational>>{{0, 0, 0, 0, 1}}));
  EXPECT_EQ(e.pairs[1].value, Rational(0));
  EXPECT_EQ(e.pairs[1].eigenspace.size(), 3u);
  EXPECT_EQ(e.pairs[1].algebraic_multiplicity, 3u);
  EXPECT_EQ(e.pairs[2].value, Rational(1));
  EXPECT_EQ(e.pairs[2].eigenspace, (std::vector<std::vector<Rational>>{{0, 0, 0, 1, 0}}));
  EXPECT_EQ(e.residual, UniPoly({1}));
}

TEST(Eigen, Rotation) {
  const EigenDecomposition e = rational_eigen(M({{0, -1}, {1, 0}}));
  EXPECT_TRUE(e.pairs.empty());
  EXPECT_EQ(e.residual, UniPoly({1, 0, 1}));
}

TEST(Eigen, LineField) {
  const EigenDecomposition e = rational_eigen(diag({0, 0, 1, 1}));
  ASSERT_EQ(e.pairs.size(), 2u);
  EXPECT_EQ(e.pairs[0].eigenspace.size(), 2u);
  EXPECT_EQ(e.pairs[1].eigenspace.size(), 2u);
}

TEST(Eigen, FractionalAndDefective) {
  const EigenDecomposition e = rational_eigen(M({{Rational(BigInt(1), BigInt(2)), 1}, {0, Rational(BigInt(1), BigInt(2))}}));
  ASSERT_EQ(e.pairs.size(), 1u);
  EXPECT_EQ(e.pairs[0].value, Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(e.pairs[0].algebraic_multiplicity, 2u);
  EXPECT_EQ(e.pairs[0].eigenspace.size(), 1u);
}

class LinalgProperty : public ::testing::Test {
protected:
  test::Rng rng{31};
};

TEST_F(LinalgProperty, RankNullity) {
  for (int k = 0; k < 200; ++k) {
    const std::size_t rows = 1 + k % 5, cols = 1 + (k / 5) % 6;
    const RatMatrix m = test::random_matrix(rows, cols, rng);
    const auto kernel = kernel_basis(m);
    ASSERT_EQ(rref(m).rank + kernel.size(), cols);
    for (const auto& v : kernel) {
      for (const auto& x : m * v) ASSERT_TRUE(x.is_zero());
    }
  }
}

TEST_F(LinalgProperty, CayleyHamilton) {
  for (int k = 0; k < 200; ++k) {
    const RatMatrix m = test::random_matrix(1 + k % 6, 1 + k % 6, rng);
    ASSERT_TRUE(evaluate_at_matrix(char_poly(m), m).is_zero());
  }
}

TEST_F(LinalgProperty, EigenPairs) {
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 5;
    // Conjugated diagonal matrices guarantee rational spectrum half the time.
    RatMatrix m = test::random_matrix(n, n, rng);
    if (k % 2 == 0) {
      RatMatrix d(n, n), p = RatMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = Rational(static_cast<std::int64_t>(i % 3) - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        p(i, i + 1) = test::random_rational(rng, 3);
      }
      // p is unipotent bidiagonal; build its inverse by elimination.
      RatMatrix inv = RatMatrix::identity(n);
      for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) {
          Rational acc;
          for (std::size_t l = i + 1; l <= j; ++l) acc += p(i, l) * inv(l, j);
          inv(i, j) = -acc;
        }
      }
      ASSERT_EQ(p * inv, RatMatrix::identity(n));
      m = p * d * inv;
    }
    const EigenDecomposition e = rational_eigen(m);
    unsigned total = 0;
    for (const auto& pair : e.pairs) {
      total += pair.algebraic_multiplicity;
      ASSERT_LE(pair.eigenspace.size(), pair.algebraic_multiplicity);
      ASSERT_GE(pair.eigenspace.size(), 1u);
      ASSERT_EQ(rref(RatMatrix::from_rows(pair.eigenspace)).rank, pair.eigenspace.size());
      const RatMatrix shifted = m - RatMatrix::identity(n).scaled(pair.value);
      for (const auto& v : pair.eigenspace) {
        for (const auto& x : shifted * v) ASSERT_TRUE(x.is_zero());
      }
    }
    ASSERT_EQ(total + static_cast<unsigned>(e.residual.degree()), n);
    if (k % 2 == 0) ASSERT_EQ(e.residual.degree(), 0);
  }
}

}  // namespace
}  // namespace vfkit
