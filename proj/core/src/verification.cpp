#include "vfkit/verification.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "vfkit/analysis.hpp"
#include "vfkit/errors.hpp"
#include "vfkit/ideal.hpp"
#include "vfkit/linalg.hpp"
#include "vfkit/oracle.hpp"
#include "vfkit/parse.hpp"

namespace vfkit::verification {

namespace {

using Rng = std::mt19937_64;

CheckResult result(bool passed, std::string detail) {
  CheckResult r;
  r.passed = passed;
  r.detail = std::move(detail);
  return r;
}

// ------------------------------------------------------------- fixtures

struct QuadricFixture {
  VarContext ctx = VarContext::standard(5);
  Polynomial h = parse_poly("x0^2 + x1^2 + x2^2 + x3*x4", ctx);
  Derivation d = Derivation::diagonal(ctx, {0, 0, 0, 1, -1});
  Ideal curve{ctx, {parse_poly("x0^2 + x1^2 + x2^2", ctx), parse_poly("x3", ctx), parse_poly("x4", ctx)}};
};

struct GenusRow {
  long long r;
  long long h3;
  long long g;
};

// Index, degree and genus of the Fano threefolds with Picard number one.
constexpr GenusRow kGenusTable[] = {
    {4, 1, 33}, {3, 2, 28}, {2, 1, 5},  {2, 2, 9},  {2, 3, 13}, {2, 4, 17}, {2, 5, 21}, {1, 2, 2},  {1, 4, 3},
    {1, 4, 3},  {1, 6, 4},  {1, 8, 5},  {1, 10, 6}, {1, 12, 7}, {1, 14, 8}, {1, 16, 9}, {1, 18, 10}, {1, 22, 12},
};

// ------------------------------------------------------------ randomness

Rational random_coefficient(Rng& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  return Rational(BigInt(n), BigInt(den(rng) == 3 ? 2 : 1));
}

Polynomial random_homogeneous(const VarContext& ctx, unsigned degree, std::size_t max_terms, Rng& rng) {
  const auto monos = projective_monomials(ctx, degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = count(rng); k > 0; --k) terms.emplace_back(monos[pick(rng)], random_coefficient(rng));
  return Polynomial::from_terms(ctx, std::move(terms));
}

// Random polynomial over every variable of the context.
Polynomial random_polynomial(const VarContext& ctx, unsigned max_degree, std::size_t max_terms, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, ctx.size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = count(rng); k > 0; --k) {
    Monomial m(ctx.size());
    for (unsigned e = deg(rng); e > 0; --e) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    terms.emplace_back(std::move(m), random_coefficient(rng));
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

RatMatrix random_matrix(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> zero(0, 3);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = zero(rng) == 0 ? Rational() : random_coefficient(rng);
  }
  return m;
}

// ------------------------------------------------------ locus comparison

// Linear forms vanishing on the span of `basis`.
std::vector<Polynomial> annihilator(const VarContext& ctx, const std::vector<std::vector<Rational>>& basis) {
  const std::size_t n = ctx.num_projective();
  std::vector<std::vector<Rational>> forms;
  if (basis.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> e(n);
      e[i] = 1;
      forms.push_back(std::move(e));
    }
  } else {
    forms = kernel_basis(RatMatrix::from_rows(basis));
  }
  std::vector<Polynomial> out;
  for (const auto& w : forms) {
    Polynomial form(ctx);
    for (std::size_t i = 0; i < n; ++i) form += Polynomial::variable(ctx, i).scaled(w[i]);
    out.push_back(std::move(form));
  }
  return out;
}

// Ideal whose radical is the ideal of the union of the projectivized
// eigenspaces: products of one annihilating form per eigenspace.
Ideal eigenspace_union_ideal(const VarContext& ctx, const EigenDecomposition& eig) {
  std::vector<Polynomial> products{Polynomial::constant(ctx, 1)};
  for (const auto& pair : eig.pairs) {
    const auto forms = annihilator(ctx, pair.eigenspace);
    std::vector<Polynomial> next;
    for (const auto& p : products) {
      for (const auto& f : forms) next.push_back(p * f);
    }
    products = std::move(next);
  }
  return Ideal(ctx, std::move(products));
}

bool same_radical(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.generators()) {
    if (!radical_member(g, b)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!radical_member(g, a)) return false;
  }
  return true;
}

std::string join(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].to_string();
  return out + ")";
}

// ---------------------------------------------------------------- checks

CheckResult quadric_golden(const SuiteOptions&) {
  QuadricFixture q;
  Polynomial dh = apply(q.d, q.h);
  return result(dh.is_zero(), "D h = " + dh.to_string());
}

CheckResult quadric_vanishing(const SuiteOptions&) {
  QuadricFixture q;
  VanishingVerdict v = check_vanishing_on_curve(q.h, q.d, q.curve);
  bool ok = v.stabilizes && v.smooth && v.vanishes_on && v.lambda && v.lambda->is_zero() && !v.is_euler;
  std::ostringstream out;
  out << "stabilizes=" << v.stabilizes << " smooth=" << v.smooth << " vanishes_on=" << v.vanishes_on
      << " lambda=" << (v.lambda ? v.lambda->to_string() : "none");
  return result(ok, out.str());
}

CheckResult coefficient_identities(const SuiteOptions&) {
  bool ok = true;
  std::ostringstream out;
  for (unsigned d : {2u, 3u, 4u}) {
    CoefficientIdentityReport r = coefficient_identity(d);
    ok = ok && r.holds();
    out << "d=" << d << ": " << r.top_coefficient.to_string() << " | " << r.bottom_coefficient.to_string()
        << (r.holds() ? "" : " (MISMATCH)") << "; ";
  }
  return result(ok, out.str());
}

CheckResult nonexistence_certificates(const SuiteOptions&) {
  const std::vector<Rational> expected3{-4, -4, -4, -3, -6};
  const std::vector<Rational> expected4{-9, -9, -9, -8, -12};
  bool ok = true;
  std::ostringstream out;
  for (unsigned d : {3u, 4u}) {
    NonexistenceCertificate c = nonexistence_check(d);
    std::vector<Rational> weights(c.top_weights.begin(), c.top_weights.end());
    bool weights_ok = weights == (d == 3 ? expected3 : expected4);
    ok = ok && c.valid() && weights_ok;
    out << "d=" << d << ": weights " << join(weights) << ", " << c.weight_zero.size()
        << " invariant monomials, singular at vertex=" << c.singular_at_vertex << "; ";
  }
  return result(ok, out.str());
}

CheckResult projective_space_golden(const SuiteOptions&) {
  const VarContext ctx = VarContext::standard(4);
  const Derivation d = Derivation::diagonal(ctx, {0, 0, 1, 1});
  const Ideal zeros = zero_locus_ideal(d);
  const Ideal lines(ctx, {parse_poly("x0*x2", ctx), parse_poly("x0*x3", ctx), parse_poly("x1*x2", ctx),
                          parse_poly("x1*x3", ctx)});
  const EigenDecomposition eig = rational_eigen(RatMatrix::from_rows(d.numeric_entries()).transposed());
  bool spectrum_ok = eig.residual.degree() == 0 && eig.pairs.size() == 2 && eig.pairs[0].value.is_zero() &&
                     eig.pairs[0].eigenspace.size() == 2 && eig.pairs[1].value.is_one() &&
                     eig.pairs[1].eigenspace.size() == 2;
  bool lines_ok = same_radical(zeros, lines);
  bool eigen_ok = same_radical(zeros, eigenspace_union_ideal(ctx, eig));
  std::ostringstream out;
  out << "V(minors) = lines {x2=x3=0} u {x0=x1=0}: " << lines_ok << ", matches eigenspaces: " << eigen_ok
      << ", spectrum {0 (dim 2), 1 (dim 2)}: " << spectrum_ok;
  return result(lines_ok && eigen_ok && spectrum_ok, out.str());
}

CheckResult genus_table(const SuiteOptions&) {
  std::size_t matched = 0;
  std::string mismatches;
  for (const auto& row : kGenusTable) {
    long long g = fano_genus(row.r, row.h3);
    if (g == row.g) {
      ++matched;
    } else {
      mismatches += " (" + std::to_string(row.r) + "," + std::to_string(row.h3) + ")->" + std::to_string(g);
    }
  }
  return result(matched == std::size(kGenusTable),
                std::to_string(matched) + "/" + std::to_string(std::size(kGenusTable)) + " rows" + mismatches);
}

CheckResult degree_cases(const SuiteOptions&) {
  struct Expected {
    int h3, d, r_x;
    const char* verdict;
  };
  const std::vector<Expected> expected{{4, 1, 1, "quartic"}, {3, 1, 2, "cubic"},   {2, 1, 3, "quadric"},
                                       {2, 2, 2, "quadric"}, {2, 3, 1, "quadric"}, {1, 1, 4, "P3"},
                                       {1, 2, 4, "P3"},      {1, 3, 4, "P3"}};
  const auto table = degree_case_table();
  bool ok = table.size() == expected.size();
  for (std::size_t i = 0; ok && i < table.size(); ++i) {
    const auto& row = table[i];
    ok = row.h3 == expected[i].h3 && row.d == expected[i].d && row.r_x == expected[i].r_x &&
         row.verdict == expected[i].verdict && row.r_d == 4 - row.h3 * row.d && row.r_x == row.r_d + row.d;
  }
  std::string detail;
  for (const auto& row : table) {
    detail += "H3=" + std::to_string(row.h3) + ",d=" + std::to_string(row.d) + ",rX=" + std::to_string(row.r_x) +
              " " + row.verdict + "; ";
  }
  return result(ok, detail);
}

CheckResult smoothness(const SuiteOptions&) {
  const VarContext ctx = VarContext::standard(5);
  bool ok = true;
  std::ostringstream out;
  for (int d : {2, 3, 4}) {
    std::string text;
    for (int i = 0; i < 5; ++i) text += (i ? " + x" : "x") + std::to_string(i) + "^" + std::to_string(d);
    bool smooth = is_smooth_projective(parse_poly(text, ctx));
    ok = ok && smooth;
    out << "Fermat d=" << d << " smooth=" << smooth << "; ";
  }
  bool cone = is_smooth_projective(parse_poly("x0^2 + x1^2 + x2^2", ctx));
  ok = ok && !cone;
  out << "cone smooth=" << cone;
  return result(ok, out.str());
}

CheckResult groebner_oracle(const SuiteOptions& options) {
  Rng rng(options.seed ^ 0x9b0b);
  std::uniform_int_distribution<int> nvars(2, 4), ngens(1, 3), gdeg(1, 3), extra(0, 1), kind(0, 2);
  const unsigned per_ideal = (options.membership_queries + options.random_ideals - 1) / options.random_ideals;
  unsigned queries = 0, agree = 0, members = 0;
  std::string first_failure;
  for (unsigned t = 0; t < options.random_ideals; ++t) {
    const VarContext ctx = VarContext::standard(static_cast<std::size_t>(nvars(rng)));
    std::vector<Polynomial> gens;
    for (int k = ngens(rng); k > 0; --k) {
      Polynomial g = random_homogeneous(ctx, static_cast<unsigned>(gdeg(rng)), 3, rng);
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    const Ideal ideal(ctx, gens);
    unsigned top = 0;
    for (const auto& g : gens) top = std::max(top, g.total_degree());
    for (unsigned q = 0; q < per_ideal; ++q) {
      const unsigned e = top + static_cast<unsigned>(extra(rng));
      Polynomial f(ctx);
      // Members as combinations, perturbed members, and plain random forms.
      const int k = kind(rng);
      if (k <= 1) {
        for (const auto& g : gens) f += g * random_homogeneous(ctx, e - g.total_degree(), 3, rng);
        if (k == 1) f += random_homogeneous(ctx, e, 1, rng);
      } else {
        f = random_homogeneous(ctx, e, 4, rng);
      }
      const bool fast = ideal_member(f, ideal);
      const bool slow = oracle::member_by_linear_algebra(f, gens, 1);
      ++queries;
      members += slow ? 1 : 0;
      if (fast == slow) {
        ++agree;
      } else if (first_failure.empty()) {
        first_failure = " first disagreement: " + f.to_string();
      }
    }
  }
  const bool ok = agree == queries && queries >= 100 && options.random_ideals >= 20;
  return result(ok, std::to_string(agree) + "/" + std::to_string(queries) + " agree over " +
                        std::to_string(options.random_ideals) + " ideals (" + std::to_string(members) +
                        " members)" + first_failure);
}

CheckResult stabilizer_dimensions(const SuiteOptions&) {
  const VarContext ctx = VarContext::standard(5);
  const Polynomial quadric = parse_poly("x0^2 + x1^2 + x2^2 + x3*x4", ctx);
  const Polynomial cubic = parse_poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", ctx);
  const StabilizerSolution sq = stabilizer_algebra(quadric);
  const StabilizerSolution sc = stabilizer_algebra(cubic);
  const std::size_t oq = oracle::stabilizer_dimension(quadric);
  const std::size_t oc = oracle::stabilizer_dimension(cubic);
  bool ok = sq.dimension == 11 && oq == 11 && sc.dimension == 1 && oc == 1 && contains_euler_pair(sq, 2) &&
            contains_euler_pair(sc, 3);
  std::ostringstream out;
  out << "quadric " << sq.dimension << " (oracle " << oq << "), Fermat cubic " << sc.dimension << " (oracle " << oc
      << ")";
  return result(ok, out.str());
}

CheckResult property_suites(const SuiteOptions& options) {
  Rng rng(options.seed ^ 0x5eed);
  const unsigned n = options.property_cases;
  unsigned leibniz = 0, euler = 0, cayley = 0, unique = 0, roundtrip = 0;

  const VarContext pctx = VarContext::standard(4, {"c"});
  for (unsigned k = 0; k < n; ++k) {
    Polynomial p = random_polynomial(pctx, 3, 4, rng);
    Polynomial q = random_polynomial(pctx, 3, 4, rng);
    std::size_t v = std::uniform_int_distribution<std::size_t>(0, pctx.size() - 1)(rng);
    if (partial_derivative(p * q, v) == partial_derivative(p, v) * q + p * partial_derivative(q, v)) ++leibniz;
  }

  const VarContext ectx = VarContext::standard(5, {"c"});
  for (unsigned k = 0; k < n; ++k) {
    unsigned d = std::uniform_int_distribution<unsigned>(0, 4)(rng);
    Polynomial p = random_homogeneous(ectx, d, 5, rng) * Polynomial::variable(ectx, "c");
    Polynomial sum(ectx);
    for (std::size_t i = 0; i < 5; ++i) sum += Polynomial::variable(ectx, i) * partial_derivative(p, i);
    if (sum == p.scaled(Rational(static_cast<std::int64_t>(d)))) ++euler;
  }

  for (unsigned k = 0; k < n; ++k) {
    RatMatrix m = random_matrix(std::uniform_int_distribution<std::size_t>(1, 5)(rng), rng);
    if (evaluate_at_matrix(char_poly(m), m).is_zero()) ++cayley;
  }

  for (unsigned k = 0; k < n; ++k) {
    const VarContext ctx = VarContext::standard(std::uniform_int_distribution<std::size_t>(2, 3)(rng));
    std::vector<Polynomial> gens;
    bool homogeneous = k % 2 == 0;
    for (int g = std::uniform_int_distribution<int>(1, 3)(rng); g > 0; --g) {
      gens.push_back(homogeneous
                         ? random_homogeneous(ctx, std::uniform_int_distribution<unsigned>(1, 3)(rng), 3, rng)
                         : random_polynomial(ctx, 2, 3, rng));
    }
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::reverse(gens.begin(), gens.end());
    if (buchberger(Ideal(ctx, gens)).basis == buchberger(Ideal(ctx, shuffled)).basis) ++unique;
  }

  const VarContext rctx = VarContext::standard(5, {"a", "c"});
  for (unsigned k = 0; k < n; ++k) {
    Polynomial p = random_polynomial(rctx, 4, 5, rng);
    Rational r = random_coefficient(rng) / random_coefficient(rng);
    if (parse_poly(p.to_string(), rctx) == p && Rational::parse(r.to_string()) == r) ++roundtrip;
  }

  std::ostringstream out;
  out << "leibniz " << leibniz << "/" << n << ", euler " << euler << "/" << n << ", cayley-hamilton " << cayley << "/"
      << n << ", gb-permutation " << unique << "/" << n << ", parse-print " << roundtrip << "/" << n;
  bool ok = n >= 200 && leibniz == n && euler == n && cayley == n && unique == n && roundtrip == n;
  return result(ok, out.str());
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks{
      {1, "quadric golden case: D h = 0", 0.1, quadric_golden},
      {2, "quadric vanishing verdict (stabilizes, smooth, vanishes_on), lambda = 0", 5.0, quadric_vanishing},
      {3, "coefficient identities c(d-1+a) and c(1-(d-1)^2) for d = 2, 3, 4", 0.0, coefficient_identities},
      {4, "nonexistence certificates for cubics and quartics", 0.0, nonexistence_certificates},
      {5, "P3 golden case: zero locus is two lines, matches eigenspaces", 0.0, projective_space_golden},
      {6, "Fano genus table (18 rows)", 0.0, genus_table},
      {7, "degree case table", 0.0, degree_cases},
      {8, "smoothness: Fermat d = 2, 3, 4 smooth, cone singular", 10.0, smoothness},
      {9, "Groebner membership agrees with linear-algebra oracle", 60.0, groebner_oracle},
      {10, "stabilizer dimensions: quadric 11, Fermat cubic 1", 0.0, stabilizer_dimensions},
      {11, "property suites (Leibniz, Euler, Cayley-Hamilton, GB uniqueness, round-trip)", 60.0, property_suites},
  };
  return checks;
}

CheckResult run_check(const Check& check, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = check.run(options);
  } catch (const std::exception& e) {
    r = result(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.id = check.id;
  r.name = check.name;
  r.time_limit = check.time_limit;
  if (check.time_limit > 0 && r.seconds >= check.time_limit) {
    r.passed = false;
    r.detail += " (exceeded " + std::to_string(check.time_limit) + " s)";
  }
  return r;
}

std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& check : acceptance_checks()) out.push_back(run_check(check, options));
  return out;
}

}  // namespace vfkit::verification
