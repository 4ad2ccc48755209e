#include "mzva/poly.hpp"

#include <functional>
#include <numeric>

#include "mzva/errors.hpp"

namespace mzva {

VariableRoster VariableRoster::fock(int d) {
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  return named(std::move(names));
}

VariableRoster VariableRoster::image(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("zeta" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return named(std::move(names));
}

VariableRoster VariableRoster::for_table(const FlavorTable& table) {
  return table.pair_count() > 0 ? image(table.pair_count()) : fock(table.dim());
}

VariableRoster VariableRoster::named(std::vector<std::string> names) {
  VariableRoster r;
  r.names_ = std::move(names);
  return r;
}

std::optional<int> VariableRoster::position_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

PolyElement PolyElement::constant(int nvars, const Rational& c) {
  PolyElement p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

PolyElement PolyElement::variable(int nvars, int position) {
  if (position < 0 || position >= nvars) throw ValidationError("variable position out of range");
  Exponents e(nvars, 0);
  e[position] = 1;
  PolyElement p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

PolyElement PolyElement::monomial(Exponents exps, const Rational& c) {
  PolyElement p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

bool PolyElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational PolyElement::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

Rational PolyElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int PolyElement::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int PolyElement::degree_in(std::span<const int> positions) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int p : positions) s += e[p];
    d = std::max(d, s);
  }
  return d;
}

void PolyElement::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ValidationError("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyElement PolyElement::operator-() const {
  PolyElement p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

PolyElement& PolyElement::operator+=(const PolyElement& other) {
  if (other.nvars_ != nvars_) throw ValidationError("polynomials over different variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& other) { return *this += -other; }

PolyElement& PolyElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

PolyElement operator*(const PolyElement& a, const PolyElement& b) {
  if (a.nvars_ != b.nvars_) throw ValidationError("polynomials over different variable sets");
  PolyElement p(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

PolyElement PolyElement::pow(int e) const {
  if (e < 0) throw ValidationError("negative polynomial power");
  PolyElement result = constant(nvars_, Rational(1));
  PolyElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PolyElement PolyElement::partial(int position) const {
  PolyElement p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[position] == 0) continue;
    Exponents d = e;
    --d[position];
    p.add_term(d, c * Rational(e[position]));
  }
  return p;
}

Rational PolyElement::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ValidationError("evaluation point has wrong length");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

PolyElement PolyElement::from_sparse(int nvars, const SparseVector<Exponents>& v) {
  PolyElement p(nvars);
  for (const auto& [e, c] : v) p.add_term(e, c);
  return p;
}

std::vector<Exponents> monomials_up_to(int nvars, int max_degree) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nvars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[pos] = k;
      rec(pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  if (max_degree >= 0) rec(0, max_degree);
  return out;
}

}  // namespace mzva
