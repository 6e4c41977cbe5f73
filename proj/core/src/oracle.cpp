#include "vfkit/oracle.hpp"

#include <algorithm>
#include <map>

#include "vfkit/errors.hpp"

namespace vfkit::oracle {

namespace {

// All monomials over every variable of the context with total degree <= bound.
std::vector<Monomial> monomials_up_to(std::size_t num_vars, unsigned bound) {
  std::vector<Monomial> out;
  std::vector<unsigned> exps(num_vars, 0);
  auto recurse = [&](auto&& self, std::size_t index, unsigned remaining) -> void {
    if (index == num_vars) {
      out.emplace_back(exps);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      exps[index] = e;
      self(self, index + 1, remaining - e);
    }
    exps[index] = 0;
  };
  recurse(recurse, 0, bound);
  return out;
}

using Coordinates = std::map<Monomial, std::size_t, MonomialGreater>;

std::vector<Rational> coordinates(const Polynomial& p, Coordinates& index) {
  for (const auto& [m, c] : p.terms()) index.try_emplace(m, index.size());
  std::vector<Rational> v(index.size());
  for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
  return v;
}

std::vector<std::vector<Rational>> pad(std::vector<std::vector<Rational>> rows, std::size_t width) {
  for (auto& r : rows) r.resize(width);
  return rows;
}

}  // namespace

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      Rational factor = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool member_up_to_degree(const Polynomial& f, std::span<const Polynomial> gens, unsigned bound) {
  if (f.is_zero()) return true;
  const VarContext& ctx = f.context();
  Coordinates index;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > bound) continue;
    for (const auto& m : monomials_up_to(ctx.size(), bound - g.total_degree())) {
      rows.push_back(coordinates(g.mul_term(m, 1), index));
    }
  }
  std::vector<Rational> target = coordinates(f, index);
  const std::size_t width = index.size();
  rows = pad(std::move(rows), width);
  target.resize(width);
  const std::size_t base = rank(rows);
  rows.push_back(std::move(target));
  return rank(std::move(rows)) == base;
}

bool member_by_linear_algebra(const Polynomial& f, std::span<const Polynomial> gens, unsigned extra) {
  unsigned start = f.total_degree();
  for (const auto& g : gens) start = std::max(start, g.total_degree());
  for (unsigned bound = start; bound <= start + extra; ++bound) {
    if (member_up_to_degree(f, gens, bound)) return true;
  }
  return false;
}

std::size_t stabilizer_dimension(const Polynomial& h) {
  const VarContext& ctx = h.context();
  const std::size_t n = ctx.num_projective();
  Coordinates index;
  std::vector<std::vector<Rational>> columns;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial xi(ctx.size());
    xi.set(i, 1);
    for (std::size_t j = 0; j < n; ++j) {
      columns.push_back(coordinates(partial_derivative(h, j).mul_term(xi, 1), index));
    }
  }
  columns.push_back(coordinates(-h, index));
  // Column rank equals row rank; eliminate on the transposed system.
  const std::size_t unknowns = columns.size();
  return unknowns - rank(pad(std::move(columns), index.size()));
}

}  // namespace vfkit::oracle
