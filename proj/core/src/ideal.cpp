#include "vfkit/ideal.hpp"

#include <algorithm>
#include <set>

#include "vfkit/errors.hpp"

namespace vfkit {

namespace {

class StepBudget {
public:
  explicit StepBudget(const GroebnerLimits& limits) : limit_(limits.max_reduction_steps) {}

  void tick() {
    if (++steps_ > limit_) {
      throw ResourceLimitExceeded("Gröbner computation exceeded " + std::to_string(limit_) + " reduction steps");
    }
  }

private:
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

// Full reduction of p modulo `basis` (every term, not only the leading one).
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis, StepBudget& budget) {
  std::vector<Polynomial::Term> remainder;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(p.leading_term());
      p = p.tail();
      continue;
    }
    budget.tick();
    Rational factor = p.leading_coefficient() / divisor->leading_coefficient();
    p -= divisor->mul_term(lm / divisor->leading_monomial(), factor);
  }
  return Polynomial::from_terms(p.context(), std::move(remainder));
}

void require_parameter_free(const Polynomial& p) {
  if (p.has_parameters()) {
    throw DomainError("Gröbner computations need parameter-free input; got '" + p.to_string() + "'");
  }
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Smallest lcm degree first, then smallest lcm in the order, then indices.
bool selected_before(const Pair& a, const Pair& b) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  int cmp = grevlex_compare(a.lcm, b.lcm);
  if (cmp != 0) return cmp < 0;
  return std::tie(a.i, a.j) < std::tie(b.i, b.j);
}

// Reduced basis from an arbitrary Gröbner basis.
std::vector<Polynomial> interreduce(std::vector<Polynomial> g, StepBudget& budget) {
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  // Keep only elements whose leading monomial is not divisible by a smaller kept one.
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    // The leading term is irreducible by minimality; reduce the tail only.
    Polynomial lead = Polynomial::monomial(minimal[k].context(), minimal[k].leading_monomial(),
                                           minimal[k].leading_coefficient());
    Polynomial r = lead + reduce_full(minimal[k].tail(), others, budget);
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

}  // namespace

// --------------------------------------------------------------------- Ideal

Ideal::Ideal(VarContext ctx, std::vector<Polynomial> generators) : ctx_(std::move(ctx)) {
  for (auto& g : generators) {
    if (!(g.context() == ctx_)) throw ContextMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool GroebnerBasis::is_unit() const noexcept {
  return basis.size() == 1 && basis.front().is_constant();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial lcm = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.mul_term(lcm / f.leading_monomial(), f.leading_coefficient().inverse());
  Polynomial b = g.mul_term(lcm / g.leading_monomial(), g.leading_coefficient().inverse());
  return a - b;
}

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerLimits& limits) {
  const VarContext& ctx = ideal.context();
  for (const auto& g : ideal.generators()) require_parameter_free(g);
  StepBudget budget(limits);

  std::vector<Polynomial> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add_element = [&](Polynomial p) {
    if (basis.size() >= limits.max_basis_size) {
      throw ResourceLimitExceeded("Gröbner basis exceeded " + std::to_string(limits.max_basis_size) + " elements");
    }
    const std::size_t k = basis.size();
    basis.push_back(p.monic());
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, basis[i].leading_monomial().lcm(basis[k].leading_monomial())});
      pending_keys.emplace(i, k);
    }
  };

  for (const auto& g : ideal.generators()) {
    Polynomial r = reduce_full(g, basis, budget);
    if (!r.is_zero()) add_element(std::move(r));
  }

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), selected_before);
    Pair pair = *it;
    pending.erase(it);
    pending_keys.erase({pair.i, pair.j});

    const Polynomial& f = basis[pair.i];
    const Polynomial& g = basis[pair.j];
    // Product criterion: coprime leading monomials reduce to zero.
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    // Chain criterion: some h with LM(h) | lcm whose pairs with f and g are done.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_keys.contains(key(pair.i, k)) && !pending_keys.contains(key(pair.j, k));
    }
    if (chain) continue;

    Polynomial r = reduce_full(s_polynomial(f, g), basis, budget);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      return {ctx, "grevlex", {Polynomial::constant(ctx, 1)}};
    }
    add_element(std::move(r));
  }

  return {ctx, "grevlex", interreduce(std::move(basis), budget)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const GroebnerLimits& limits) {
  if (!(f.context() == gb.context)) throw ContextMismatch();
  StepBudget budget(limits);
  return reduce_full(f, gb.basis, budget);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits) {
  if (!(f.context() == ideal.context())) throw ContextMismatch();
  if (f.is_zero()) return true;
  require_parameter_free(f);
  return normal_form(f, buchberger(ideal, limits), limits).is_zero();
}

bool radical_member(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits) {
  const VarContext& ctx = ideal.context();
  if (!(f.context() == ctx)) throw ContextMismatch();
  if (f.is_zero()) return true;
  require_parameter_free(f);

  std::string aux = "t";
  while (ctx.index_of(aux)) aux += "_";
  VarContext ext = ctx.with_auxiliary(aux);

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext));
  Polynomial t = Polynomial::variable(ext, ext.size() - 1);
  gens.push_back(Polynomial::constant(ext, 1) - t * f.embed(ext));
  return buchberger(Ideal(ext, std::move(gens)), limits).is_unit();
}

Ideal jacobian_ideal(const Polynomial& h) {
  std::vector<Polynomial> gens{h};
  for (std::size_t i = 0; i < h.context().num_projective(); ++i) gens.push_back(partial_derivative(h, i));
  return Ideal(h.context(), std::move(gens));
}

SmoothnessReport check_smooth_projective(const Polynomial& h, const GroebnerLimits& limits) {
  if (h.has_parameters()) throw DomainError("smoothness check needs a parameter-free polynomial");
  Homogeneity hom = is_homogeneous(h);
  if (hom.kind != Homogeneity::Kind::Degree) {
    throw DomainError("smoothness check needs a nonzero homogeneous polynomial");
  }
  if (hom.degree < 1) throw DomainError("smoothness check needs degree at least 1");
  const Ideal jac = jacobian_ideal(h);
  for (std::size_t i = 0; i < h.context().num_projective(); ++i) {
    if (!radical_member(Polynomial::variable(h.context(), i), jac, limits)) return {false, i};
  }
  return {true, std::nullopt};
}

bool is_smooth_projective(const Polynomial& h, const GroebnerLimits& limits) {
  return check_smooth_projective(h, limits).smooth;
}

Ideal zero_locus_ideal(const Derivation& d) {
  if (!d.is_parameter_free()) throw DomainError("zero locus needs a parameter-free derivation");
  const VarContext& ctx = d.context();
  const std::size_t n = d.size();
  // image[j] = D(x_j) = (A^T x)_j.
  std::vector<Polynomial> image;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial v(ctx);
    for (std::size_t i = 0; i < n; ++i) v += Polynomial::variable(ctx, i).scaled(d.entry(i, j).constant_value());
    image.push_back(std::move(v));
  }
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      minors.push_back(Polynomial::variable(ctx, i) * image[j] - Polynomial::variable(ctx, j) * image[i]);
    }
  }
  return Ideal(ctx, std::move(minors));
}

VanishingReport check_vanishes_on(const Derivation& d, const Ideal& ideal, Containment mode,
                                  const GroebnerLimits& limits) {
  if (!(d.context() == ideal.context())) throw ContextMismatch();
  const Ideal zeros = zero_locus_ideal(d);
  if (mode == Containment::SchemeTheoretic) {
    const GroebnerBasis gb = buchberger(ideal, limits);
    for (const auto& minor : zeros.generators()) {
      if (!normal_form(minor, gb, limits).is_zero()) return {false, minor};
    }
    return {true, std::nullopt};
  }
  for (const auto& minor : zeros.generators()) {
    if (!radical_member(minor, ideal, limits)) return {false, minor};
  }
  return {true, std::nullopt};
}

bool vanishes_on(const Derivation& d, const Ideal& ideal, Containment mode, const GroebnerLimits& limits) {
  return check_vanishes_on(d, ideal, mode, limits).vanishes;
}

}  // namespace vfkit
