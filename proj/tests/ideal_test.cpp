#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"
#include "vfkit/errors.hpp"
#include "vfkit/ideal.hpp"
#include "vfkit/linalg.hpp"
#include "vfkit/oracle.hpp"

namespace vfkit {
namespace {

using test::P;

std::vector<std::string> texts(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

class IdealTest : public ::testing::Test {
protected:
  VarContext ctx = VarContext::standard(5);
  Polynomial quadric = P("x0^2 + x1^2 + x2^2 + x3*x4", ctx);
  Derivation dv = Derivation::diagonal(ctx, {0, 0, 0, 1, -1});
  Ideal curve{ctx, {P("x0^2 + x1^2 + x2^2", ctx), P("x3", ctx), P("x4", ctx)}};

  Ideal ideal(std::initializer_list<const char*> gens) {
    std::vector<Polynomial> polys;
    for (const char* g : gens) polys.push_back(P(g, ctx));
    return Ideal(ctx, std::move(polys));
  }
};

TEST_F(IdealTest, ZeroGeneratorsAreDropped) {
  const Ideal i = ideal({"0", "x0 - x0", "x1"});
  EXPECT_EQ(i.generators().size(), 1u);
  EXPECT_TRUE(ideal({"0"}).is_zero_ideal());
  EXPECT_THROW(Ideal(ctx, {P("x0", VarContext::standard(3))}), ContextMismatch);
}

TEST_F(IdealTest, BuchbergerExamples) {
  EXPECT_EQ(texts(buchberger(ideal({"x0^2", "x0"})).basis), std::vector<std::string>{"x0"});
  EXPECT_EQ(texts(buchberger(ideal({"x0 - x1", "x1 - x2"})).basis),
            (std::vector<std::string>{"x0 - x2", "x1 - x2"}));
  EXPECT_EQ(buchberger(ideal({"3*x0^2 - 6*x3*x4"})).basis, std::vector<Polynomial>{P("x0^2 - 2*x3*x4", ctx)});
  EXPECT_TRUE(buchberger(ideal({"x0*x1 - 1", "x0"})).is_unit());
  EXPECT_TRUE(buchberger(ideal({})).basis.empty());
  EXPECT_EQ(buchberger(ideal({"x1"})).order, "grevlex");
}

TEST_F(IdealTest, BuchbergerRejectsParameters) {
  const VarContext pctx = VarContext::standard(2, {"a"});
  EXPECT_THROW(buchberger(Ideal(pctx, {P("a*x0", pctx)})), DomainError);
}

TEST_F(IdealTest, StepLimit) {
  GroebnerLimits tight;
  tight.max_reduction_steps = 3;
  const Ideal i = ideal({"x0^3 + 2*x1*x2*x3 - x3^3", "x1^3 - x0*x2^2 + x3^2*x0", "x2^3 + x0*x1*x3 - 5*x1^2*x2"});
  EXPECT_THROW(buchberger(i, tight), ResourceLimitExceeded);
}

TEST_F(IdealTest, NormalForm) {
  const GroebnerBasis x0 = buchberger(ideal({"x0"}));
  EXPECT_TRUE(normal_form(P("x0^2", ctx), x0).is_zero());
  EXPECT_EQ(normal_form(P("x1", ctx), x0), P("x1", ctx));
  EXPECT_TRUE(normal_form(apply(dv, quadric), buchberger(Ideal(ctx, {quadric}))).is_zero());
}

TEST_F(IdealTest, Membership) {
  EXPECT_TRUE(ideal_member(P("x3*x4", ctx), ideal({"x3"})));
  EXPECT_FALSE(ideal_member(P("x0", ctx), ideal({"x3", "x4"})));
  const Ideal zeros = zero_locus_ideal(dv);
  for (const auto& minor : zeros.generators()) EXPECT_TRUE(ideal_member(minor, curve));
  EXPECT_TRUE(ideal_member(Polynomial(ctx), ideal({})));
  EXPECT_FALSE(ideal_member(P("1", ctx), ideal({})));
}

TEST_F(IdealTest, RadicalMembership) {
  EXPECT_TRUE(radical_member(P("x0", ctx), ideal({"x0^2"})));
  EXPECT_FALSE(radical_member(P("x1", ctx), ideal({"x0^2"})));
  EXPECT_TRUE(radical_member(P("x0*x1", ctx), ideal({"x0^2*x1^3"})));
  EXPECT_FALSE(ideal_member(P("x0*x1", ctx), ideal({"x0^2*x1^3"})));
}

TEST_F(IdealTest, RadicalMembershipAvoidsNameClash) {
  const VarContext tctx({"s", "t"});
  EXPECT_TRUE(radical_member(P("t", tctx), Ideal(tctx, {P("t^3", tctx)})));
  EXPECT_FALSE(radical_member(P("s", tctx), Ideal(tctx, {P("t^3", tctx)})));
}

TEST_F(IdealTest, Smoothness) {
  EXPECT_TRUE(is_smooth_projective(quadric));
  const SmoothnessReport cone = check_smooth_projective(P("x0^2 + x1^2 + x2^2", ctx));
  EXPECT_FALSE(cone.smooth);
  ASSERT_TRUE(cone.singular_witness.has_value());
  EXPECT_GE(*cone.singular_witness, 3u);
  EXPECT_TRUE(is_smooth_projective(P("x0^4 + x1^4 + x2^4 + x3^4 + x4^4", ctx)));
  EXPECT_FALSE(is_smooth_projective(P("x0*x1", ctx)));
  EXPECT_THROW(is_smooth_projective(P("x0 + x1^2", ctx)), DomainError);
  EXPECT_THROW(is_smooth_projective(P("1", ctx)), DomainError);
}

TEST_F(IdealTest, JacobianIdeal) {
  EXPECT_EQ(texts(jacobian_ideal(P("x0*x1", ctx)).generators()),
            (std::vector<std::string>{"x0*x1", "x1", "x0"}));
}

TEST_F(IdealTest, ZeroLocusOfEulerIsEverything) {
  EXPECT_TRUE(zero_locus_ideal(Derivation::euler(ctx)).is_zero_ideal());
  EXPECT_TRUE(vanishes_on(Derivation::euler(ctx), ideal({"x0"})));
  EXPECT_TRUE(vanishes_on(Derivation::euler(ctx), curve, Containment::SchemeTheoretic));
}

TEST_F(IdealTest, ZeroLocusOfQuadricField) {
  // Plane {x3 = x4 = 0} together with the points (0:0:0:1:0) and (0:0:0:0:1).
  const Ideal zeros = zero_locus_ideal(dv);
  const Ideal expected = ideal({"x0*x3", "x1*x3", "x2*x3", "x0*x4", "x1*x4", "x2*x4", "x3*x4"});
  for (const auto& g : zeros.generators()) EXPECT_TRUE(radical_member(g, expected));
  for (const auto& g : expected.generators()) EXPECT_TRUE(radical_member(g, zeros));
}

TEST_F(IdealTest, ZeroLocusOfLineField) {
  const VarContext c4 = VarContext::standard(4);
  const Ideal zeros = zero_locus_ideal(Derivation::diagonal(c4, {0, 0, 1, 1}));
  for (const char* g : {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}) EXPECT_TRUE(radical_member(P(g, c4), zeros));
  for (const auto& g : zeros.generators()) {
    EXPECT_TRUE(radical_member(g, Ideal(c4, {P("x0*x2", c4), P("x0*x3", c4), P("x1*x2", c4), P("x1*x3", c4)})));
  }
  EXPECT_FALSE(radical_member(P("x0", c4), zeros));
}

TEST_F(IdealTest, VanishesOn) {
  EXPECT_TRUE(vanishes_on(dv, curve));
  const VanishingReport r = check_vanishes_on(dv, ideal({"x0"}));
  EXPECT_FALSE(r.vanishes);
  ASSERT_TRUE(r.witness.has_value());
  const std::vector<Rational> point{0, 1, 0, 1, 1};
  EXPECT_FALSE(evaluate_projective(*r.witness, point).is_zero());
}

TEST_F(IdealTest, SchemeTheoreticIsStricter) {
  const Ideal doubled = ideal({"x0^2 + x1^2 + x2^2", "x3^2", "x4"});
  EXPECT_TRUE(vanishes_on(dv, doubled, Containment::SetTheoretic));
  EXPECT_FALSE(vanishes_on(dv, doubled, Containment::SchemeTheoretic));
}

// ------------------------------------------------------------- properties

class IdealProperty : public ::testing::Test {
protected:
  test::Rng rng{37};

  std::vector<Polynomial> random_generators(const VarContext& ctx, bool homogeneous) {
    std::vector<Polynomial> gens;
    const int count = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < count; ++k) {
      const unsigned deg = std::uniform_int_distribution<unsigned>(1, 3)(rng);
      gens.push_back(homogeneous ? test::random_form(ctx, rng, deg, 3) : test::random_poly(ctx, rng, 2, 3));
    }
    return gens;
  }
};

TEST_F(IdealProperty, ReducedBasisInvariants) {
  for (int k = 0; k < 200; ++k) {
    const VarContext ctx = VarContext::standard(2 + k % 3);
    const GroebnerBasis gb = buchberger(Ideal(ctx, random_generators(ctx, k % 2 == 0)));
    const auto& g = gb.basis;
    for (std::size_t i = 0; i < g.size(); ++i) {
      ASSERT_TRUE(g[i].leading_coefficient().is_one());
      if (i > 0) ASSERT_GT(grevlex_compare(g[i - 1].leading_monomial(), g[i].leading_monomial()), 0);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        for (const auto& [m, c] : g[i].terms()) ASSERT_FALSE(g[j].leading_monomial().divides(m));
        ASSERT_TRUE(normal_form(s_polynomial(g[i], g[j]), gb).is_zero());
      }
    }
  }
}

TEST_F(IdealProperty, UniqueUnderPermutation) {
  for (int k = 0; k < 200; ++k) {
    const VarContext ctx = VarContext::standard(2 + k % 3);
    std::vector<Polynomial> gens = random_generators(ctx, k % 2 == 0);
    const GroebnerBasis first = buchberger(Ideal(ctx, gens));
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens) g = g.scaled(test::random_rational(rng, 4) + Rational(BigInt(1), BigInt(11)));
    ASSERT_EQ(buchberger(Ideal(ctx, gens)).basis, first.basis);
  }
}

TEST_F(IdealProperty, OracleEquivalence) {
  for (int k = 0; k < 40; ++k) {
    const VarContext ctx = VarContext::standard(2 + k % 3);
    const std::vector<Polynomial> gens = random_generators(ctx, true);
    const Ideal ideal(ctx, gens);
    unsigned top = 0;
    for (const auto& g : gens) top = std::max(top, g.total_degree());
    for (int q = 0; q < 6; ++q) {
      Polynomial f(ctx);
      if (q % 2 == 0) {
        for (const auto& g : gens) f += g * test::random_form(ctx, rng, top + 1 - g.total_degree(), 3);
      } else {
        f = test::random_form(ctx, rng, top + (q == 3 ? 1 : 0), 3);
      }
      ASSERT_EQ(ideal_member(f, ideal), oracle::member_by_linear_algebra(f, gens, 1)) << f.to_string();
    }
  }
}

TEST_F(IdealProperty, MembershipImpliesRadicalMembership) {
  for (int k = 0; k < 60; ++k) {
    const VarContext ctx = VarContext::standard(2 + k % 2);
    const std::vector<Polynomial> gens = random_generators(ctx, k % 2 == 0);
    const Ideal ideal(ctx, gens);
    Polynomial f = test::random_poly(ctx, rng, 2, 3);
    if (k % 3 != 0) f = f * gens.front();
    if (ideal_member(f, ideal)) ASSERT_TRUE(radical_member(f, ideal));
    // f^2 in I forces f in the radical.
    if (ideal_member(f * f, ideal)) ASSERT_TRUE(radical_member(f, ideal));
  }
}

TEST_F(IdealProperty, ZeroLocusMatchesEigenvectors) {
  const VarContext ctx = VarContext::standard(3);
  std::vector<std::vector<Rational>> points;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        if (a || b || c) points.push_back({a, b, c});
      }
    }
  }
  for (int k = 0; k < 100; ++k) {
    RatMatrix a = test::random_matrix(3, 3, rng, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rational(a(i, j).num() % BigInt(3));
    }
    const Derivation d = Derivation::from_rationals(ctx, a.to_rows());
    const Ideal zeros = zero_locus_ideal(d);
    const EigenDecomposition eig = rational_eigen(a.transposed());
    for (const auto& p : points) {
      bool on_locus = true;
      for (const auto& g : zeros.generators()) on_locus = on_locus && evaluate_projective(g, p).is_zero();
      bool eigen = false;
      for (const auto& pair : eig.pairs) {
        auto rows = pair.eigenspace;
        rows.push_back(p);
        eigen = eigen || rref(RatMatrix::from_rows(rows)).rank == pair.eigenspace.size();
      }
      ASSERT_EQ(on_locus, eigen);
    }
  }
}

}  // namespace
}  // namespace vfkit
