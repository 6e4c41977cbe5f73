#include "vfkit/derivation.hpp"

#include "vfkit/errors.hpp"

namespace vfkit {

Derivation::Derivation(VarContext ctx)
    : ctx_(std::move(ctx)), n_(ctx_.num_projective()), entries_(n_ * n_, Polynomial(ctx_)) {}

Derivation::Derivation(VarContext ctx, std::vector<std::vector<Polynomial>> entries)
    : ctx_(std::move(ctx)), n_(ctx_.num_projective()) {
  if (entries.size() != n_) throw DomainError("derivation matrix must have one row per projective variable");
  entries_.reserve(n_ * n_);
  for (auto& row : entries) {
    if (row.size() != n_) throw DomainError("derivation matrix must be square");
    for (auto& e : row) {
      if (!(e.context() == ctx_)) throw ContextMismatch();
      if (!e.is_parameter_only()) {
        throw DomainError("derivation entry '" + e.to_string() + "' contains a projective variable");
      }
      entries_.push_back(std::move(e));
    }
  }
}

Derivation Derivation::from_rationals(VarContext ctx, const std::vector<std::vector<Rational>>& entries) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& row : entries) {
    auto& out = polys.emplace_back();
    for (const auto& v : row) out.push_back(Polynomial::constant(ctx, v));
  }
  return Derivation(std::move(ctx), std::move(polys));
}

Derivation Derivation::diagonal(VarContext ctx, const std::vector<Rational>& weights) {
  const std::size_t n = ctx.num_projective();
  if (weights.size() != n) throw DomainError("diagonal has wrong length");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = weights[i];
  return from_rationals(std::move(ctx), m);
}

Derivation Derivation::euler(VarContext ctx) {
  std::vector<Rational> ones(ctx.num_projective(), Rational(1));
  return diagonal(std::move(ctx), ones);
}

bool Derivation::is_diagonal() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !entry(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Derivation::is_parameter_free() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_constant()) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> Derivation::numeric_entries() const {
  if (!is_parameter_free()) throw DomainError("derivation has parameter entries");
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = entry(i, j).constant_value();
  }
  return out;
}

std::optional<Rational> Derivation::euler_multiple() const {
  if (!is_parameter_free() || !is_diagonal()) return std::nullopt;
  Rational c = entry(0, 0).constant_value();
  for (std::size_t i = 1; i < n_; ++i) {
    if (entry(i, i).constant_value() != c) return std::nullopt;
  }
  return c;
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
  if (!(d.context() == f.context())) throw ContextMismatch();
  const VarContext& ctx = f.context();
  const std::size_t n = d.size();
  Polynomial result(ctx);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial df = partial_derivative(f, j);
    if (df.is_zero()) continue;
    // Column j of A gives D(x_j) = sum_i a_ij x_i.
    Polynomial image(ctx);
    for (std::size_t i = 0; i < n; ++i) {
      if (!d.entry(i, j).is_zero()) image += d.entry(i, j) * Polynomial::variable(ctx, i);
    }
    if (!image.is_zero()) result += image * df;
  }
  return result;
}

Derivation euler_reduce(const Derivation& d) {
  const VarContext& ctx = d.context();
  const std::size_t n = d.size();
  Rational trace;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& e = d.entry(i, i);
    // Only the constant term of a parameter entry is rational.
    if (!e.is_zero() && e.terms().back().first.is_constant()) trace += e.terms().back().second;
  }
  Rational shift = trace / Rational(static_cast<std::int64_t>(n));
  std::vector<std::vector<Polynomial>> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial e = d.entry(i, j);
      if (i == j) e -= Polynomial::constant(ctx, shift);
      entries[i].push_back(std::move(e));
    }
  }
  return Derivation(ctx, std::move(entries));
}

Polynomial monomial_weight(const Derivation& d, const Monomial& m) {
  if (!d.is_diagonal()) throw DomainError("monomial weights require a diagonal derivation");
  const VarContext& ctx = d.context();
  if (m.size() != ctx.size()) throw DomainError("monomial length does not match context");
  Polynomial weight(ctx);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (m[i]) weight += d.entry(i, i).scaled(Rational(static_cast<std::int64_t>(m[i])));
  }
  return weight;
}

std::vector<Monomial> weight_zero_monomials(const Derivation& d, unsigned degree) {
  if (!d.is_diagonal()) throw DomainError("weight analysis requires a diagonal derivation");
  if (!d.is_parameter_free()) throw DomainError("weight analysis requires a rational diagonal");
  std::vector<Monomial> out;
  for (auto& m : projective_monomials(d.context(), degree)) {
    if (monomial_weight(d, m).is_zero()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace vfkit
