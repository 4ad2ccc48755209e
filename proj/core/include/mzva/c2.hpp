#pragma once

#include <vector>

#include "mzva/fock.hpp"
#include "mzva/linalg.hpp"
#include "mzva/poly.hpp"

namespace mzva {

// Graded piece of C_n(M(1)) up to a weight bound, as a row-reduced basis.
class CnSpan {
 public:
  CnSpan(int n, int weight_bound) : n_(n), weight_bound_(weight_bound) {}

  int n() const { return n_; }
  int weight_bound() const { return weight_bound_; }
  std::size_t dimension() const { return echelon_.rank(); }
  std::vector<FockElement> basis() const;

  // Exact membership for elements of weight <= weight_bound.
  bool contains(const FockElement& v) const;
  // True when both spans coincide (same bound assumed by the caller).
  bool same_span(const CnSpan& other) const;

  // Returns true when v enlarged the span.
  bool add(const FockElement& v);

 private:
  int n_;
  int weight_bound_;
  Echelon<FockMonomial> echelon_;
};

// Spanning set from all basis pairs (u, v) with wt(u) + wt(v) + n - 1 <= bound:
// u_{-n} v for n >= 2, and a_{-1} b (a, b of positive weight) together with
// L(-1) w for n = 1.
CnSpan cn_spanning_set(const ModeEngine& engine, int n, int weight_bound);

// Span of every basis monomial of weight <= bound that has a factor of mode >= 2.
CnSpan mode_two_monomial_span(const FlavorTable& table, int weight_bound);

// C_2 membership via the monomial characterization: every monomial carries a
// mode >= 2 factor.
bool in_c2(const FockElement& v);

// M(1) -> Q[x_1..x_d] modulo C_2: alpha_{i1}(-1)...alpha_{ik}(-1) 1 maps to
// x_{i1}...x_{ik}; monomials with a mode >= 2 factor map to 0.
PolyElement c2_reduce(const FockElement& v, int nvars);

// Lift of a polynomial to its canonical representative (all modes 1).
FockElement c2_lift(const PolyElement& p);

// Commutative product and Poisson bracket on M(1)/C_2.
PolyElement poisson_product(const ModeEngine& engine, const FockElement& a, const FockElement& b);
PolyElement poisson_bracket(const ModeEngine& engine, const FockElement& a, const FockElement& b);

}  // namespace mzva
