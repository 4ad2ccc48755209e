#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mzva/errors.hpp"
#include "mzva/fock.hpp"
#include "mzva/poly.hpp"
#include "mzva/verdict.hpp"

namespace mzva {

// Subspaces M of M(1) containing C_2, described by their image in
// M(1)/C_2 = Q[x1..xd], and the image subspace sum_i (d/dx_i - zeta_i) Q[zeta, x].
enum class SpecKind { C2PlusSpan, C2PlusIdeal, ImageSubspace };

std::string_view to_string(SpecKind k);

struct SubspaceSpec {
  SpecKind kind = SpecKind::C2PlusIdeal;
  int variables = 1;  // d for the C2 kinds, 2n for the image kind
  int pairs = 0;      // n, image kind only
  std::vector<PolyElement> generators;
  int degree_bound = 8;
  int power_window = 8;

  VariableRoster roster() const;
  // Throws ValidationError when an invariant fails.
  void validate() const;

  // Text format, one `key = value` per line, '#' comments:
  //   kind = c2-plus-span | c2-plus-ideal | image-subspace
  //   variables = d      (C2 kinds)        pairs = n   (image kind)
  //   generator = <polynomial>             (repeatable)
  //   degree_bound = B   power_window = P
  static SubspaceSpec parse(std::string_view text);
};

// Thrown when answering a query would need a degree above the declared bound.
class DegreeOverflow : public BoundOverflow {
 public:
  DegreeOverflow(int power, const std::string& message) : BoundOverflow(message), power_(power) {}
  int power() const { return power_; }

 private:
  int power_;
};

// a_{n1}(a_{n2}(...(a_{nt} a))), each n_i in {0, -1}.
FockElement string_product(const ModeEngine& engine, const FockElement& a, std::span<const int> string);

// Exact solve of p = sum_j g_j q_j with deg q_j <= bound; returns the q_j.
std::optional<std::vector<PolyElement>> ideal_solve(const PolyElement& p,
                                                    const std::vector<PolyElement>& generators,
                                                    int bound);

// Exact membership in the subspace of Q[x] the spec describes (C2 kinds), or
// nullopt when a multi-generator nonlinear ideal cannot be decided at the bound.
std::optional<bool> spec_contains(const PolyElement& p, const SubspaceSpec& spec);

// Radical membership of p in the polynomial-side subspace.
Verdict poly_radical_member(const PolyElement& p, const SubspaceSpec& spec);

// r_{0,-1}(M) membership through the C_2 quotient.  A proof is spot-checked on
// the vertex side over all {0,-1}-strings of length <= 4 that the proof covers.
Verdict vertex_radical_member(const ModeEngine& engine, const FockElement& a, const SubspaceSpec& spec);

// sr_{0,-1}(M) membership.  Refutation witnesses are triples (b, string, s):
// b_s applied to the string product leaves M for every longer string.
Verdict strong_radical_member(const ModeEngine& engine, const FockElement& a, const SubspaceSpec& spec,
                              int probe_weight);

// f_i(a) = b_i(1) a - a_i(-1) a on the image configuration (1-based i).
FockElement f_map(const ModeEngine& engine, int i, const FockElement& a);

// Linear functional on Q[zeta, x] sending zeta^a x^b to prod_i [a_i = b_i] a_i!.
// It vanishes on every (d/dx_i - zeta_i) q, so a nonzero value certifies that
// p lies outside the image subspace for every degree bound.
Rational image_obstruction(const PolyElement& p, int n);

// Exact solve of p = sum_i (d/dx_i - zeta_i) q_i with deg q_i <= bound.
std::optional<std::vector<PolyElement>> image_solve(const PolyElement& p, int n, int bound);

// Membership in the image subspace: Proved with the q_i as witness, Refuted by
// the obstruction functional, Inconclusive at the bound otherwise.
Verdict image_member(const PolyElement& p, int n, int degree_bound);

}  // namespace mzva
