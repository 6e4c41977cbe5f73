#include "vfkit/polynomial.hpp"

#include <algorithm>
#include <set>

#include "vfkit/errors.hpp"

namespace vfkit {

// ---------------------------------------------------------------- VarContext

VarContext::VarContext(std::vector<std::string> projective, std::vector<std::string> parameters) {
  if (projective.size() < 2) throw DomainError("at least two projective variables are required");
  auto data = std::make_shared<Data>();
  data->num_projective = projective.size();
  data->num_parameters = parameters.size();
  data->names = std::move(projective);
  data->names.insert(data->names.end(), std::make_move_iterator(parameters.begin()),
                     std::make_move_iterator(parameters.end()));
  std::set<std::string_view> seen;
  for (const auto& n : data->names) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  data_ = std::move(data);
}

VarContext VarContext::standard(std::size_t count, std::vector<std::string> parameters) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return VarContext(std::move(names), std::move(parameters));
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const noexcept {
  const auto& names = data_->names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarContext::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw UnknownVariable(std::string(name));
  return *idx;
}

VarContext VarContext::with_auxiliary(std::string name) const {
  if (index_of(name)) throw DomainError("duplicate variable name '" + name + "'");
  auto data = std::make_shared<Data>(*data_);
  data->names.push_back(std::move(name));
  return VarContext(std::move(data));
}

bool VarContext::is_prefix_of(const VarContext& other) const noexcept {
  if (data_ == other.data_) return true;
  if (num_projective() != other.num_projective() || num_parameters() != other.num_parameters() ||
      size() > other.size()) {
    return false;
  }
  return std::equal(data_->names.begin(), data_->names.end(), other.data_->names.begin());
}

bool operator==(const VarContext& a, const VarContext& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->num_projective == b.data_->num_projective &&
         a.data_->num_parameters == b.data_->num_parameters && a.data_->names == b.data_->names;
}

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(std::span<const unsigned> exponents) : exps_(exponents.size(), 0) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (exponent > kMaxExponent) throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
  degree_ = degree_ - exps_[i] + exponent;
  exps_[i] = static_cast<Exponent>(exponent);
}

unsigned Monomial::degree_of_first(std::size_t count) const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < count && i < exps_.size(); ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > kMaxExponent) throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] && other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::extended(std::size_t num_vars) const {
  Monomial r = *this;
  r.exps_.resize(num_vars, 0);
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------- Polynomial

namespace {

using Term = Polynomial::Term;

// Merges two descending term lists, negating the second when `negate_b`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].first, b[j].first);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
      ++j;
    } else {
      Rational c = negate_b ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(VarContext ctx, const Rational& value) {
  Polynomial p(ctx);
  if (!value.is_zero()) p.terms_.emplace_back(Monomial(ctx.size()), value);
  return p;
}

Polynomial Polynomial::variable(VarContext ctx, std::string_view name) {
  std::size_t idx = ctx.require_index(name);
  return variable(std::move(ctx), idx);
}

Polynomial Polynomial::variable(VarContext ctx, std::size_t index) {
  if (index >= ctx.size()) throw UnknownVariable("#" + std::to_string(index));
  Monomial m(ctx.size());
  m.set(index, 1);
  return monomial(std::move(ctx), std::move(m));
}

Polynomial Polynomial::monomial(VarContext ctx, Monomial m, Rational coefficient) {
  if (m.size() != ctx.size()) throw DomainError("monomial length does not match context");
  Polynomial p(std::move(ctx));
  if (!coefficient.is_zero()) p.terms_.emplace_back(std::move(m), std::move(coefficient));
  return p;
}

Polynomial Polynomial::from_terms(VarContext ctx, std::vector<Term> terms) {
  std::map<Monomial, Rational, MonomialGreater> acc;
  for (auto& [m, c] : terms) {
    if (m.size() != ctx.size()) throw DomainError("monomial length does not match context");
    auto [it, inserted] = acc.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
  }
  std::vector<Term> sorted;
  sorted.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) sorted.emplace_back(m, std::move(c));
  }
  return Polynomial(std::move(ctx), std::move(sorted));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational() : terms_[0].second;
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::has_parameters() const noexcept {
  const std::size_t lo = ctx_.num_projective(), hi = lo + ctx_.num_parameters();
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (m[i]) return true;
    }
  }
  return false;
}

bool Polynomial::is_parameter_only() const noexcept {
  const std::size_t np = ctx_.num_projective(), hi = np + ctx_.num_parameters();
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if ((i < np || i >= hi) && m[i]) return false;
    }
  }
  return true;
}

void Polynomial::require_same_context(const Polynomial& other) const {
  if (!(ctx_ == other.ctx_)) throw ContextMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_context(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_context(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_context(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.ctx_);
  if (lhs.size() == 1) return rhs.mul_term(lhs.terms_[0].first, lhs.terms_[0].second);
  if (rhs.size() == 1) return lhs.mul_term(rhs.terms_[0].first, rhs.terms_[0].second);
  std::map<Monomial, Rational, MonomialGreater> acc;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  }
  return Polynomial(lhs.ctx_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return Polynomial(ctx_);
  Polynomial r = *this;
  for (auto& term : r.terms_) term.second *= factor;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& coefficient) const {
  if (coefficient.is_zero()) return Polynomial(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& [tm, tc] : terms_) out.emplace_back(tm * m, tc * coefficient);
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::tail() const {
  return Polynomial(ctx_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::embed(const VarContext& extended) const {
  if (!ctx_.is_prefix_of(extended)) throw ContextMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Appending trailing zero exponents preserves grevlex order.
  for (const auto& [m, c] : terms_) out.emplace_back(m.extended(extended.size()), c);
  return Polynomial(extended, std::move(out));
}

Polynomial Polynomial::restrict_to(const VarContext& prefix) const {
  if (!prefix.is_prefix_of(ctx_)) throw ContextMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> exps(prefix.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i >= prefix.size()) {
        if (m[i]) throw DomainError("variable '" + ctx_.name(i) + "' occurs in polynomial");
      } else {
        exps[i] = m[i];
      }
    }
    out.emplace_back(Monomial(exps), c);
  }
  return Polynomial(prefix, std::move(out));
}

std::string monomial_to_string(const VarContext& ctx, const Monomial& m) {
  std::string out;
  auto emit = [&](std::size_t i) {
    if (!m[i]) return;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  };
  // Parameters read as coefficients, so they come first.
  const std::size_t np = ctx.num_projective(), npar = ctx.num_parameters();
  for (std::size_t i = np; i < np + npar; ++i) emit(i);
  for (std::size_t i = 0; i < np; ++i) emit(i);
  for (std::size_t i = np + npar; i < ctx.size(); ++i) emit(i);
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_constant()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += monomial_to_string(ctx_, m);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- operations

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  return partial_derivative(p, p.context().require_index(var));
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.context().size()) throw UnknownVariable("#" + std::to_string(var_index));
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m[var_index];
    if (!e) continue;
    Monomial dm = m;
    dm.set(var_index, e - 1);
    out.emplace_back(std::move(dm), c * Rational(e));
  }
  // Lowering one exponent can reorder terms, so re-sort.
  return Polynomial::from_terms(p.context(), std::move(out));
}

Polynomial coefficient_of(const Polynomial& p, const Monomial& m) {
  const VarContext& ctx = p.context();
  const std::size_t np = ctx.num_projective();
  if (m.size() != ctx.size()) throw DomainError("monomial length does not match context");
  for (std::size_t i = np; i < m.size(); ++i) {
    if (m[i]) throw DomainError("coefficient_of expects a projective monomial, got variable '" + ctx.name(i) + "'");
  }
  std::vector<Polynomial::Term> out;
  for (const auto& [tm, c] : p.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < np && match; ++i) match = tm[i] == m[i];
    if (match) out.emplace_back(tm / m, c);
  }
  return Polynomial::from_terms(ctx, std::move(out));
}

Homogeneity is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return {Homogeneity::Kind::AnyDegree, 0};
  const std::size_t np = p.context().num_projective();
  unsigned d = p.terms().front().first.degree_of_first(np);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree_of_first(np) != d) return {Homogeneity::Kind::NotHomogeneous, 0};
  }
  return {Homogeneity::Kind::Degree, d};
}

namespace {

Rational power(const Rational& base, unsigned exp) {
  Rational result = 1;
  for (unsigned k = 0; k < exp; ++k) result *= base;
  return result;
}

}  // namespace

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational, std::less<>>& point) {
  const VarContext& ctx = p.context();
  std::vector<Rational> values(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    auto it = point.find(ctx.name(i));
    if (it == point.end()) throw DomainError("no value assigned to variable '" + ctx.name(i) + "'");
    values[i] = it->second;
  }
  Rational sum;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      if (m[i]) term *= power(values[i], m[i]);
    }
    sum += term;
  }
  return sum;
}

Polynomial evaluate_projective(const Polynomial& p, std::span<const Rational> point) {
  const VarContext& ctx = p.context();
  const std::size_t np = ctx.num_projective();
  if (point.size() != np) throw DomainError("point has wrong number of coordinates");
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    Rational factor = c;
    for (std::size_t i = 0; i < np && !factor.is_zero(); ++i) {
      if (m[i]) factor *= power(point[i], m[i]);
    }
    if (factor.is_zero()) continue;
    Monomial rest = m;
    for (std::size_t i = 0; i < np; ++i) rest.set(i, 0);
    out.emplace_back(std::move(rest), std::move(factor));
  }
  return Polynomial::from_terms(ctx, std::move(out));
}

std::vector<Monomial> projective_monomials(const VarContext& ctx, unsigned degree) {
  const std::size_t np = ctx.num_projective();
  std::vector<Monomial> out;
  std::vector<unsigned> exps(ctx.size(), 0);
  // Distribute `remaining` over projective variables index..np-1.
  auto recurse = [&](auto&& self, std::size_t index, unsigned remaining) -> void {
    if (index + 1 == np) {
      exps[index] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      exps[index] = e;
      self(self, index + 1, remaining - e);
    }
    exps[index] = 0;
  };
  recurse(recurse, 0, degree);
  std::sort(out.begin(), out.end(), MonomialGreater{});
  return out;
}

Monomial projective_monomial(const VarContext& ctx, std::span<const unsigned> exponents) {
  if (exponents.size() != ctx.num_projective()) throw DomainError("wrong number of exponents");
  std::vector<unsigned> exps(ctx.size(), 0);
  std::copy(exponents.begin(), exponents.end(), exps.begin());
  return Monomial(exps);
}

}  // namespace vfkit
