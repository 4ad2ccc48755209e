#include "mzva/comm_va.hpp"

#include <functional>

#include "mzva/errors.hpp"

namespace mzva {

// ---------------------------------------------------------------------------
// LaurentElement

LaurentElement LaurentElement::monomial(int exponent, const Rational& c) {
  LaurentElement e;
  e.add_term(exponent, c);
  return e;
}

Rational LaurentElement::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentElement::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentElement& LaurentElement::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (e == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// DerivationAlgebra

DerivationAlgebra::DerivationAlgebra(Carrier c, int low, int high, int shift)
    : carrier_(c), low_(low), high_(high), shift_(shift) {}

DerivationAlgebra DerivationAlgebra::truncated(int k, int derivation_shift) {
  if (k < 1) throw ValidationError("truncation degree must be >= 1");
  if (derivation_shift < 1) throw ValidationError("t^s d/dt preserves (t^k) only for s >= 1");
  DerivationAlgebra a(Carrier::Truncated, 0, k - 1, derivation_shift);
  a.validate_leibniz();
  return a;
}

DerivationAlgebra DerivationAlgebra::laurent(int window, int derivation_shift) {
  if (window < 0) throw ValidationError("exponent window must be >= 0");
  DerivationAlgebra a(Carrier::Laurent, -window, window, derivation_shift);
  a.validate_leibniz();
  return a;
}

std::vector<LaurentElement> DerivationAlgebra::basis() const {
  std::vector<LaurentElement> out;
  for (int e = low_; e <= high_; ++e) out.push_back(LaurentElement::monomial(e));
  return out;
}

void DerivationAlgebra::check_in_window(const LaurentElement& a) const {
  if (a.is_zero()) return;
  if (a.min_exponent() < low_ || a.max_exponent() > high_)
    throw BoundOverflow("exponent outside window [" + std::to_string(low_) + ", " +
                        std::to_string(high_) + "]");
}

LaurentElement DerivationAlgebra::multiply(const LaurentElement& a, const LaurentElement& b) const {
  check_in_window(a);
  check_in_window(b);
  LaurentElement out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      const int e = ea + eb;
      if (carrier_ == Carrier::Truncated && e > high_) continue;
      out.add_term(e, ca * cb);
    }
  check_in_window(out);
  return out;
}

LaurentElement DerivationAlgebra::derivation(const LaurentElement& a) const {
  check_in_window(a);
  LaurentElement out;
  for (const auto& [e, c] : a.terms()) {
    if (e == 0) continue;
    const int target = e + shift_ - 1;
    if (carrier_ == Carrier::Truncated && target > high_) continue;
    out.add_term(target, c * Rational(e));
  }
  check_in_window(out);
  return out;
}

void DerivationAlgebra::validate_leibniz() const {
  for (int i = low_; i <= high_; ++i)
    for (int j = low_; j <= high_; ++j) {
      try {
        auto a = LaurentElement::monomial(i), b = LaurentElement::monomial(j);
        auto lhs = derivation(multiply(a, b));
        auto rhs = multiply(derivation(a), b) + multiply(a, derivation(b));
        if (lhs != rhs) throw ValidationError("derivation fails the Leibniz rule on t^" +
                                              std::to_string(i) + ", t^" + std::to_string(j));
      } catch (const BoundOverflow&) {
        // pair leaves the window; the rule is only required inside it
      }
    }
}

LaurentElement DerivationAlgebra::mode(const LaurentElement& a, int n, const LaurentElement& b) const {
  if (n >= 0) return {};
  const int j = -1 - n;
  LaurentElement da = a;
  for (int i = 0; i < j && !da.is_zero(); ++i) da = derivation(da);
  da *= Rational(1) / factorial(j);
  return multiply(da, b);
}

FinDimAlgebra DerivationAlgebra::to_findim() const {
  if (carrier_ != Carrier::Truncated) throw ValidationError("only truncated carriers are finite-dimensional");
  return FinDimAlgebra::truncated_polynomial(dimension(), "t");
}

AlgVector DerivationAlgebra::to_coordinates(const LaurentElement& a) const {
  check_in_window(a);
  AlgVector v(static_cast<std::size_t>(dimension()));
  for (const auto& [e, c] : a.terms()) v[e - low_] = c;
  return v;
}

LaurentElement comm_mode_action(const DerivationAlgebra& algebra, const LaurentElement& a, int n,
                                const LaurentElement& b) {
  return algebra.mode(a, n, b);
}

// ---------------------------------------------------------------------------
// Radicals

namespace {

Echelon<int> span_of(const std::vector<LaurentElement>& subspace) {
  Echelon<int> e;
  for (const auto& v : subspace) e.insert({v.terms().begin(), v.terms().end()});
  return e;
}

bool member(const Echelon<int>& span, const LaurentElement& v) {
  return span.contains({v.terms().begin(), v.terms().end()});
}

// Calls visit(result) for every nonzero string a_{n1}...a_{nt} a, n_i in {0,-1}.
// Zero results are pruned since every mode maps 0 to 0.
void for_each_string(const DerivationAlgebra& alg, const LaurentElement& a, int t,
                     const std::function<void(const LaurentElement&)>& visit) {
  std::function<void(const LaurentElement&, int)> rec = [&](const LaurentElement& x, int left) {
    if (x.is_zero()) return;
    if (left == 0) {
      visit(x);
      return;
    }
    rec(alg.mode(a, 0, x), left - 1);
    rec(alg.mode(a, -1, x), left - 1);
  };
  rec(a, t);
}

}  // namespace

bool comm_radical_member(const DerivationAlgebra& algebra, const LaurentElement& a,
                         const std::vector<LaurentElement>& subspace) {
  const Echelon<int> span = span_of(subspace);
  const int n = algebra.dimension();
  bool ok = true;
  for (int t = n; t <= 2 * n + 1 && ok; ++t)
    for_each_string(algebra, a, t, [&](const LaurentElement& x) { ok = ok && member(span, x); });
  return ok;
}

bool comm_strong_radical_member(const DerivationAlgebra& algebra, const LaurentElement& a,
                                const std::vector<LaurentElement>& subspace) {
  const Echelon<int> span = span_of(subspace);
  const int n = algebra.dimension();
  const auto basis = algebra.basis();
  bool ok = true;
  for (int t = n; t <= 2 * n + 1 && ok; ++t)
    for_each_string(algebra, a, t, [&](const LaurentElement& x) {
      for (const auto& b : basis)
        for (int s : {0, -1}) {
          if (!ok) return;
          ok = member(span, algebra.mode(b, s, x)) && member(span, algebra.mode(x, s, b));
        }
    });
  return ok;
}

Verdict laurent_radical_member(const LaurentElement& v, int window, int powers) {
  Fields bounds{{"window", std::to_string(window)}, {"powers", std::to_string(powers)}};
  if (v.is_zero()) return Verdict::proved("structural: every power is 0", {}, bounds);
  if (v.min_exponent() < -window || v.max_exponent() > window)
    throw BoundOverflow("element leaves the exponent window [-" + std::to_string(window) + ", " +
                        std::to_string(window) + "]");
  if (v.min_exponent() > 0 || v.max_exponent() < 0)
    return Verdict::proved("structural: exponents of one strict sign are closed under addition, so no power has a constant term",
                           {}, bounds);
  const auto alg = DerivationAlgebra::laurent(window);
  LaurentElement p = v;
  for (int m = 1; m <= powers; ++m) {
    if (m > 1) p = alg.multiply(p, v);
    if (!p.constant_term().is_zero())
      return Verdict::refuted("power with nonzero constant term",
                              {{"m", std::to_string(m)}, {"constant_term", p.constant_term().to_string()}},
                              bounds);
  }
  return Verdict::inconclusive("no power up to the bound has a nonzero constant term", bounds);
}

}  // namespace mzva
