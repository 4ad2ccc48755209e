#include "mzva/c2.hpp"

#include <algorithm>

#include "mzva/errors.hpp"

namespace mzva {

namespace {
SparseVector<FockMonomial> as_vector(const FockElement& v) { return {v.terms().begin(), v.terms().end()}; }
}  // namespace

std::vector<FockElement> CnSpan::basis() const {
  std::vector<FockElement> out;
  for (const auto& row : echelon_.basis())
    out.push_back(FockElement::from_terms({row.begin(), row.end()}));
  return out;
}

bool CnSpan::contains(const FockElement& v) const { return echelon_.contains(as_vector(v)); }

bool CnSpan::add(const FockElement& v) { return echelon_.insert(as_vector(v)); }

bool CnSpan::same_span(const CnSpan& other) const {
  if (dimension() != other.dimension()) return false;
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

CnSpan cn_spanning_set(const ModeEngine& engine, int n, int weight_bound) {
  if (n < 1) throw ValidationError("C_n requires n >= 1");
  if (weight_bound < 0) throw ValidationError("weight bound must be >= 0");
  CnSpan span(n, weight_bound);
  const auto& table = engine.table();
  const int max_factor_weight = weight_bound - n + 1;
  const auto basis = basis_monomials_up_to(table, std::max(max_factor_weight, 0));
  for (const auto& u : basis)
    for (const auto& v : basis) {
      if (u.weight() + v.weight() + n - 1 > weight_bound) continue;
      if (n == 1 && (u.is_vacuum() || v.is_vacuum())) continue;
      span.add(engine.mode_action(u, -n, v));
    }
  if (n == 1) {
    for (const auto& w : basis_monomials_up_to(table, weight_bound - 1))
      span.add(engine.virasoro_mode(-1, FockElement::monomial(w)));
  }
  return span;
}

CnSpan mode_two_monomial_span(const FlavorTable& table, int weight_bound) {
  CnSpan span(2, weight_bound);
  for (const auto& m : basis_monomials_up_to(table, weight_bound))
    if (!m.is_vacuum() && m.factor(0).mode >= 2) span.add(FockElement::monomial(m));
  return span;
}

bool in_c2(const FockElement& v) {
  return std::all_of(v.terms().begin(), v.terms().end(), [](const FockElement::Term& t) {
    return !t.first.is_vacuum() && t.first.factor(0).mode >= 2;
  });
}

PolyElement c2_reduce(const FockElement& v, int nvars) {
  PolyElement p(nvars);
  Exponents e(nvars);
  for (const auto& [m, c] : v.terms()) {
    if (!m.is_vacuum() && m.factor(0).mode >= 2) continue;  // highest mode first
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      int f = m.factor(i).flavor;
      if (f > nvars) throw ValidationError("flavor exceeds variable count");
      ++e[f - 1];
    }
    p.add_term(e, c);
  }
  return p;
}

FockElement c2_lift(const PolyElement& p) {
  std::vector<FockElement::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    std::vector<FockMonomial::Factor> factors;
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) factors.push_back({i + 1, 1});
    terms.emplace_back(FockMonomial::from_factors(factors), c);
  }
  return FockElement::from_terms(std::move(terms));
}

PolyElement poisson_product(const ModeEngine& engine, const FockElement& a, const FockElement& b) {
  return c2_reduce(engine.mode_action(a, -1, b), engine.table().dim());
}

PolyElement poisson_bracket(const ModeEngine& engine, const FockElement& a, const FockElement& b) {
  return c2_reduce(engine.mode_action(a, 0, b), engine.table().dim());
}

}  // namespace mzva
