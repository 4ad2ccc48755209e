#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzva/comm_va.hpp"
#include "mzva/fock.hpp"
#include "mzva/rational.hpp"

namespace mzva {

// ---------------------------------------------------------------------------
// Generic vertex-algebra identities.  An Ops type provides
//   Elem mode(const Elem& u, int n, const Elem& v)
//   Elem d(const Elem& v)
//   int top_index(const Elem& u, const Elem& v)   // u_k v = 0 for k > top_index
// and Elem supports +, -, scalar *, ==.  Each function returns (lhs, rhs).

template <class Elem>
using Sides = std::pair<Elem, Elem>;

// [u_m, v_n] w = sum_i binom(m, i) (u_i v)_{m+n-i} w
template <class Ops, class Elem>
Sides<Elem> commutator_sides(const Ops& ops, const Elem& u, int m, const Elem& v, int n, const Elem& w) {
  Elem lhs = ops.mode(u, m, ops.mode(v, n, w)) - ops.mode(v, n, ops.mode(u, m, w));
  Elem rhs{};
  for (int i = 0; i <= ops.top_index(u, v); ++i) {
    const Rational c = binomial(m, i);
    if (!c.is_zero()) rhs += c * ops.mode(ops.mode(u, i, v), m + n - i, w);
  }
  return {lhs, rhs};
}

// (u_m v)_n w = sum_i (-1)^i binom(m, i) (u_{m-i} v_{n+i} w - (-1)^m v_{m+n-i} u_i w)
template <class Ops, class Elem>
Elem iterate_rhs(const Ops& ops, const Elem& u, int m, const Elem& v, int n, const Elem& w) {
  Elem rhs{};
  const int top = std::max(ops.top_index(v, w) - n, ops.top_index(u, w));
  const Rational sign_m = m % 2 == 0 ? Rational(1) : Rational(-1);
  for (int i = 0; i <= top; ++i) {
    const Rational c = binomial(m, i) * (i % 2 == 0 ? Rational(1) : Rational(-1));
    if (c.is_zero()) continue;
    rhs += c * ops.mode(u, m - i, ops.mode(v, n + i, w));
    rhs -= (c * sign_m) * ops.mode(v, m + n - i, ops.mode(u, i, w));
  }
  return rhs;
}

template <class Ops, class Elem>
Sides<Elem> iterate_sides(const Ops& ops, const Elem& u, int m, const Elem& v, int n, const Elem& w) {
  return {ops.mode(ops.mode(u, m, v), n, w), iterate_rhs(ops, u, m, v, n, w)};
}

// [D, v_n] w = -n v_{n-1} w
template <class Ops, class Elem>
Sides<Elem> d_commutator_sides(const Ops& ops, const Elem& v, int n, const Elem& w) {
  return {ops.d(ops.mode(v, n, w)) - ops.mode(v, n, ops.d(w)), Rational(-n) * ops.mode(v, n - 1, w)};
}

// (D v)_n w = -n v_{n-1} w
template <class Ops, class Elem>
Sides<Elem> d_mode_sides(const Ops& ops, const Elem& v, int n, const Elem& w) {
  return {ops.mode(ops.d(v), n, w), Rational(-n) * ops.mode(v, n - 1, w)};
}

// sum_{i >= first} coeff(i) / i! D^i (v_{i+shift} u)
template <class Ops, class Elem, class Coeff>
Elem d_series(const Ops& ops, const Elem& u, const Elem& v, int first, int shift, Coeff coeff) {
  Elem total{};
  for (int i = first; i + shift <= ops.top_index(v, u); ++i) {
    Elem term = ops.mode(v, i + shift, u);
    for (int k = 0; k < i && !(term == Elem{}); ++k) term = ops.d(term);
    total += (coeff(i) / factorial(i)) * term;
  }
  return total;
}

inline Rational minus_one_pow(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

// u_n v = -sum_{i>=0} (-1)^{i+n} / i! D^i (v_{i+n} u)
template <class Ops, class Elem>
Sides<Elem> skew_sides(const Ops& ops, const Elem& u, int n, const Elem& v) {
  return {ops.mode(u, n, v), d_series(ops, u, v, 0, n, [&](int i) { return -minus_one_pow(i + n); })};
}

// u_0 v = -v_0 u - sum_{i>=1} (-1)^i / i! D^i v_i u
template <class Ops, class Elem>
Sides<Elem> zero_mode_skew_sides(const Ops& ops, const Elem& u, const Elem& v) {
  Elem rhs = Rational(-1) * ops.mode(v, 0, u);
  rhs -= d_series(ops, u, v, 1, 0, [](int i) { return minus_one_pow(i); });
  return {ops.mode(u, 0, v), rhs};
}

// u_0 u = 1/2 sum_{i>=1} D^i / i! u_i u (-1)^{-i-1}
template <class Ops, class Elem>
Sides<Elem> self_zero_mode_sides(const Ops& ops, const Elem& u) {
  return {ops.mode(u, 0, u),
          d_series(ops, u, u, 1, 0, [](int i) { return Rational(1, 2) * minus_one_pow(i + 1); })};
}

// u_{-1} v = v_{-1} u - sum_{i>=1} (-1)^{i+1} / i! D^i v_{i-1} u
template <class Ops, class Elem>
Sides<Elem> minus_one_skew_sides(const Ops& ops, const Elem& u, const Elem& v) {
  Elem rhs = ops.mode(v, -1, u);
  rhs -= d_series(ops, u, v, 1, -1, [](int i) { return minus_one_pow(i + 1); });
  return {ops.mode(u, -1, v), rhs};
}

// u_0 D(v) = D(u_0 v)
template <class Ops, class Elem>
Sides<Elem> zero_mode_d_sides(const Ops& ops, const Elem& u, const Elem& v) {
  return {ops.mode(u, 0, ops.d(v)), ops.d(ops.mode(u, 0, v))};
}

// u_{-1} D(v) = D(u_{-1} v) - u_{-2} v
template <class Ops, class Elem>
Sides<Elem> minus_one_mode_d_sides(const Ops& ops, const Elem& u, const Elem& v) {
  return {ops.mode(u, -1, ops.d(v)), ops.d(ops.mode(u, -1, v)) - ops.mode(u, -2, v)};
}

// Adapters.

struct FockOps {
  const ModeEngine& engine;
  FockElement mode(const FockElement& u, int n, const FockElement& v) const { return engine.mode_action(u, n, v); }
  FockElement d(const FockElement& v) const { return engine.d_operator(v); }
  int top_index(const FockElement& u, const FockElement& v) const {
    if (u.is_zero() || v.is_zero()) return -1;
    return u.max_weight() + v.max_weight() - 1;
  }
};

struct CommOps {
  const DerivationAlgebra& algebra;
  LaurentElement mode(const LaurentElement& u, int n, const LaurentElement& v) const { return algebra.mode(u, n, v); }
  LaurentElement d(const LaurentElement& v) const { return algebra.d_operator(v); }
  int top_index(const LaurentElement&, const LaurentElement&) const { return -1; }
};

// ---------------------------------------------------------------------------
// Axiom suites on M(1).

struct AxiomOptions {
  int weight = 4;   // u, v range over basis states of weight <= weight, w up to weight - 1
  int flavors = 2;  // every d in 1..flavors
  int mode_min = -3;
  int mode_max = 3;
};

struct AxiomFailure {
  std::string identity;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct SuiteResult {
  std::string id;
  std::string identity;
  long checks = 0;
  long failures = 0;
  std::vector<AxiomFailure> samples;  // first few failures
  double seconds = 0;
  bool passed() const { return failures == 0 && checks > 0; }
};

const std::vector<std::string>& suite_ids();
std::string_view suite_identity(std::string_view id);

// Throws ValidationError for an unknown id or bad options.
SuiteResult run_suite(std::string_view id, const AxiomOptions& options);
// All suites, in suite_ids() order.
std::vector<SuiteResult> run_all_suites(const AxiomOptions& options);

}  // namespace mzva
