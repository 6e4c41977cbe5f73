#include "vfkit/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "vfkit/errors.hpp"

namespace vfkit {

namespace {

void require_plain_hypersurface(const Polynomial& h, const char* what) {
  if (h.has_parameters()) throw DomainError(std::string(what) + " needs a parameter-free polynomial");
  Homogeneity hom = is_homogeneous(h);
  if (hom.kind != Homogeneity::Kind::Degree) {
    throw DomainError(std::string(what) + " needs a nonzero homogeneous polynomial");
  }
  if (hom.degree < 1) throw DomainError(std::string(what) + " needs degree at least 1");
}

Monomial mono(const VarContext& ctx, std::array<unsigned, 5> exps) { return projective_monomial(ctx, exps); }

}  // namespace

// ------------------------------------------------------------ stabilizers

StabilizerSolution stabilizer_algebra(const Polynomial& h) {
  require_plain_hypersurface(h, "stabilizer_algebra");
  const VarContext& ctx = h.context();
  const std::size_t n = ctx.num_projective();
  const std::size_t unknowns = n * n + 1;

  // Column k = i*n + j holds x_i * dh/dx_j; the last column holds -h.
  std::vector<Polynomial> columns;
  columns.reserve(unknowns);
  std::vector<Polynomial> partials;
  for (std::size_t j = 0; j < n; ++j) partials.push_back(partial_derivative(h, j));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial xi = Polynomial::variable(ctx, i);
    for (std::size_t j = 0; j < n; ++j) columns.push_back(xi * partials[j]);
  }
  columns.push_back(-h);

  std::map<Monomial, std::size_t, MonomialGreater> rows;
  for (const auto& col : columns) {
    for (const auto& [m, c] : col.terms()) rows.try_emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, idx] : rows) idx = next++;

  RatMatrix system(rows.size(), unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    for (const auto& [m, c] : columns[k].terms()) system(rows.at(m), k) = c;
  }

  StabilizerSolution out;
  for (const auto& v : kernel_basis(system)) {
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
    }
    out.basis.push_back({std::move(a), v.back()});
  }
  out.dimension = out.basis.size();
  return out;
}

bool contains_euler_pair(const StabilizerSolution& solution, unsigned degree) {
  if (solution.basis.empty()) return false;
  const std::size_t n = solution.basis.front().matrix.rows();
  const std::size_t len = n * n + 1;
  RatMatrix span(solution.basis.size() + 1, len);
  for (std::size_t r = 0; r < solution.basis.size(); ++r) {
    const auto& pair = solution.basis[r];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) span(r, i * n + j) = pair.matrix(i, j);
    }
    span(r, len - 1) = pair.lambda;
  }
  const std::size_t last = solution.basis.size();
  for (std::size_t i = 0; i < n; ++i) span(last, i * n + i) = 1;
  span(last, len - 1) = Rational(static_cast<std::int64_t>(degree));
  return rref(span).rank == solution.basis.size();
}

// ----------------------------------------------------- structured matrix

Derivation structured_matrix(const VarContext& ctx, const std::array<Polynomial, 4>& star, const Polynomial& a) {
  if (ctx.num_projective() != 5) throw DomainError("structured matrix needs five projective variables");
  std::vector<std::vector<Polynomial>> entries(5, std::vector<Polynomial>(5, Polynomial(ctx)));
  entries[3][3] = Polynomial::constant(ctx, 1);
  for (std::size_t j = 0; j < 4; ++j) entries[4][j] = star[j];
  entries[4][4] = a;
  return Derivation(ctx, std::move(entries));
}

Derivation structured_matrix(const std::array<Rational, 4>& star, const Rational& a) {
  VarContext ctx = VarContext::standard(5);
  std::array<Polynomial, 4> entries{Polynomial(ctx), Polynomial(ctx), Polynomial(ctx), Polynomial(ctx)};
  for (std::size_t j = 0; j < 4; ++j) entries[j] = Polynomial::constant(ctx, star[j]);
  return structured_matrix(ctx, entries, Polynomial::constant(ctx, a));
}

// ------------------------------------------------------------- cone shape

bool ConeShape::some_xi_x4_top_nonzero() const noexcept {
  for (const auto& c : coeff_xi_x4_top) {
    if (!c.is_zero()) return true;
  }
  return false;
}

ConeShape cone_shape(const Polynomial& h) {
  const VarContext& ctx = h.context();
  if (ctx.num_projective() != 5) throw DomainError("cone_shape needs five projective variables");
  require_plain_hypersurface(h, "cone_shape");
  const unsigned d = is_homogeneous(h).degree;

  std::vector<Polynomial::Term> f_terms, g_terms;
  for (const auto& [m, c] : h.terms()) {
    if (m[4] > 0) {
      Monomial q = m;
      q.set(4, m[4] - 1);
      g_terms.emplace_back(std::move(q), c);
    } else if (m[3] > 0) {
      throw ConeShapeError("monomial " + monomial_to_string(ctx, m) +
                               " contains x3 without x4, so h is not f(x0,x1,x2) + x4*g",
                           m);
    } else {
      f_terms.emplace_back(m, c);
    }
  }
  ConeShape out{Polynomial::from_terms(ctx, std::move(f_terms)), Polynomial::from_terms(ctx, std::move(g_terms)),
                Rational(), {}};
  out.coeff_x3_top = coefficient_of(h, mono(ctx, {0, 0, 0, d - 1, 1})).constant_value();
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<unsigned, 5> e{0, 0, 0, 0, d - 1};
    e[i] += 1;
    out.coeff_xi_x4_top[i] = coefficient_of(h, mono(ctx, e)).constant_value();
  }
  return out;
}

// ---------------------------------------------------- coefficient identity

CoefficientIdentityReport coefficient_identity(unsigned d) {
  if (d < 2 || d > 4) throw DomainError("coefficient_identity supports degrees 2, 3 and 4");

  // Tail monomials: everything the cone decomposition allows except x3^(d-1)*x4.
  const VarContext plain = VarContext::standard(5);
  const Monomial top_plain = mono(plain, {0, 0, 0, d - 1, 1});
  std::vector<Monomial> tail;
  for (const auto& m : projective_monomials(plain, d)) {
    bool x3_without_x4 = m[3] > 0 && m[4] == 0;
    if (!x3_without_x4 && !(m == top_plain)) tail.push_back(m);
  }

  std::vector<std::string> params{"c", "a", "s0", "s1", "s2", "s3"};
  for (std::size_t k = 0; k < tail.size(); ++k) params.push_back("p" + std::to_string(k));
  const VarContext ctx = VarContext::standard(5, params);
  auto param = [&](const std::string& name) { return Polynomial::variable(ctx, name); };
  auto lift = [&](const Monomial& m) { return m.extended(ctx.size()); };

  const Polynomial c = param("c");
  const Polynomial a = param("a");
  const Monomial top = lift(top_plain);
  Polynomial h = c * Polynomial::monomial(ctx, top);
  for (std::size_t k = 0; k < tail.size(); ++k) {
    h += param("p" + std::to_string(k)) * Polynomial::monomial(ctx, lift(tail[k]));
  }

  CoefficientIdentityReport report{d, h, structured_matrix(ctx, {param("s0"), param("s1"), param("s2"), param("s3")}, a),
                                   Polynomial(ctx), Polynomial(ctx), Polynomial(ctx), Polynomial(ctx)};
  const Polynomial one = Polynomial::constant(ctx, 1);
  const auto dm1 = static_cast<std::int64_t>(d) - 1;

  report.top_coefficient = coefficient_of(apply(report.d_structured, h), top);
  report.top_expected = c * (Polynomial::constant(ctx, dm1) + a);
  report.top_holds = report.top_coefficient == report.top_expected;

  const Derivation diag = Derivation::diagonal(ctx, {0, 0, 0, 1, Rational(1 - static_cast<std::int64_t>(d))});
  const Monomial bottom = lift(mono(plain, {0, 0, 0, 1, d - 1}));
  report.bottom_coefficient = coefficient_of(apply(diag, c * Polynomial::monomial(ctx, bottom)), bottom);
  report.bottom_expected = c * (one - Polynomial::constant(ctx, dm1 * dm1));
  report.bottom_holds = report.bottom_coefficient == report.bottom_expected;
  return report;
}

// --------------------------------------------------------- nonexistence

NonexistenceCertificate nonexistence_check(unsigned d) {
  if (d == 2) {
    throw DomainError("nonexistence_check refuses degree 2: x3*x4 has weight zero and the quadric exists");
  }
  if (d != 3 && d != 4) throw DomainError("nonexistence_check supports degrees 3 and 4");

  const VarContext plain = VarContext::standard(5);
  const Derivation diag = Derivation::diagonal(plain, {0, 0, 0, 1, Rational(1 - static_cast<std::int64_t>(d))});
  NonexistenceCertificate cert{d, diag, weight_zero_monomials(diag, d), {}, false,
                               Polynomial(plain), Polynomial(plain), {}, false};

  cert.no_top_monomial_invariant = true;
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<unsigned, 5> e{0, 0, 0, 0, d - 1};
    e[i] += 1;
    const Monomial m = mono(plain, e);
    cert.top_weights[i] = monomial_weight(diag, m).constant_value();
    bool listed = std::find(cert.weight_zero.begin(), cert.weight_zero.end(), m) != cert.weight_zero.end();
    if (cert.top_weights[i].is_zero() || listed) cert.no_top_monomial_invariant = false;
  }

  std::vector<std::string> params;
  for (std::size_t k = 0; k < cert.weight_zero.size(); ++k) params.push_back("p" + std::to_string(k));
  const VarContext ctx = VarContext::standard(5, params);
  Polynomial h(ctx);
  for (std::size_t k = 0; k < cert.weight_zero.size(); ++k) {
    h += Polynomial::variable(ctx, 5 + k) * Polynomial::monomial(ctx, cert.weight_zero[k].extended(ctx.size()));
  }
  cert.generic_invariant = h;

  const std::vector<Rational> vertex{0, 0, 0, 0, 1};
  cert.value_at_vertex = evaluate_projective(h, vertex);
  cert.singular_at_vertex = cert.value_at_vertex.is_zero();
  for (std::size_t i = 0; i < 5; ++i) {
    cert.gradient_at_vertex.push_back(evaluate_projective(partial_derivative(h, i), vertex));
    if (!cert.gradient_at_vertex.back().is_zero()) cert.singular_at_vertex = false;
  }
  return cert;
}

// --------------------------------------------------- vanishing on a curve

VanishingVerdict check_vanishing_on_curve(const Polynomial& h, const Derivation& d, const Ideal& curve,
                                          Containment mode, const GroebnerLimits& limits) {
  require_plain_hypersurface(h, "check_vanishing_on_curve");
  if (!(d.context() == h.context()) || !(curve.context() == h.context())) throw ContextMismatch();
  if (!d.is_parameter_free()) throw DomainError("check_vanishing_on_curve needs a parameter-free derivation");

  VanishingVerdict out;
  const Polynomial dh = apply(d, h);
  const GroebnerBasis principal = buchberger(Ideal(h.context(), {h}), limits);
  const Polynomial remainder = normal_form(dh, principal, limits);
  out.stabilizes = remainder.is_zero();
  if (out.stabilizes) {
    // D preserves degree, so D h in (h) means D h = lambda * h.
    out.lambda = dh.is_zero() ? Rational() : dh.leading_coefficient() / h.leading_coefficient();
    if (!(dh - h.scaled(*out.lambda)).is_zero()) {
      throw Error("internal: D h is in (h) but not a scalar multiple of h");
    }
  } else {
    out.reasons.push_back("stabilizes: D h is not in (h); normal form " + remainder.to_string());
  }
  auto euler = d.euler_multiple();
  out.is_euler = euler.has_value() && !euler->is_zero();
  if (out.is_euler) out.reasons.push_back("euler: D is a multiple of the Euler field and induces the zero field");

  const SmoothnessReport smooth = check_smooth_projective(h, limits);
  out.smooth = smooth.smooth;
  if (!out.smooth) {
    out.reasons.push_back("smooth: " + h.context().name(*smooth.singular_witness) +
                          " is not in the radical of the Jacobian ideal");
  }

  const VanishingReport vanish = check_vanishes_on(d, curve, mode, limits);
  out.vanishes_on = vanish.vanishes;
  if (!out.vanishes_on) {
    out.reasons.push_back("vanishes_on: zero-locus minor " + vanish.witness->to_string() +
                          (mode == Containment::SetTheoretic ? " is not in the radical of the curve ideal"
                                                             : " is not in the curve ideal"));
  }
  return out;
}

// ---------------------------------------------------- index arithmetic

std::vector<DegreeCase> degree_case_table() {
  static const char* const kVerdicts[] = {"", "P3", "quadric", "cubic", "quartic"};
  std::vector<DegreeCase> out;
  for (int h3 = 4; h3 >= 1; --h3) {
    // r_X = 4 - (H^3 - 1) d does not shrink for H^3 = 1, so d stops at 3 there.
    const int max_d = h3 == 1 ? 3 : 3 / (h3 - 1);
    for (int d = 1; d <= max_d; ++d) {
      const int r_d = 4 - h3 * d;
      const int r_x = r_d + d;
      if (r_x < 1) break;
      out.push_back({h3, d, r_d, r_x, kVerdicts[h3]});
    }
  }
  return out;
}

long long fano_genus(long long r, long long h3) {
  if (r <= 0 || h3 <= 0) throw DomainError("index and degree must be positive");
  if (r > 2'000'000 || r * r * r > std::numeric_limits<long long>::max() / 2 / h3) {
    throw DomainError("genus overflows");
  }
  long long cube = r * r * r * h3;
  if (cube % 2 != 0) throw DomainError("r^3 * H^3 is odd, so the genus is not an integer");
  return cube / 2 + 1;
}

}  // namespace vfkit
