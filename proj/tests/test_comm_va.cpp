#include <gtest/gtest.h>

#include "mzva/axioms.hpp"
#include "mzva/comm_va.hpp"
#include "mzva/errors.hpp"
#include "mzva/parse.hpp"

using namespace mzva;

namespace {

LaurentElement L(const char* text) { return parse_laurent(text); }

TEST(CommVa, ModeExamples) {
  const auto alg = DerivationAlgebra::laurent(8);
  EXPECT_TRUE(alg.mode(L("t + 3"), 0, L("t^2")).is_zero());
  EXPECT_TRUE(alg.mode(L("t"), 2, L("t")).is_zero());
  EXPECT_EQ(alg.mode(L("t"), -1, L("t")), L("t^2"));
  EXPECT_EQ(alg.mode(L("t^2"), -2, L("1")), L("2 * t"));
  EXPECT_EQ(alg.mode(L("t^3"), -3, L("t^-1")), L("3"));
  EXPECT_EQ(alg.d_operator(L("t^-2")), L("-2 * t^-3"));
}

TEST(CommVa, TruncatedCarrier) {
  const auto alg = DerivationAlgebra::truncated(4, 1);
  EXPECT_EQ(alg.dimension(), 4);
  EXPECT_TRUE(alg.multiply(L("t^2"), L("t^2")).is_zero());
  EXPECT_EQ(alg.derivation(L("t^2")), L("2 * t^2"));  // t d/dt
  EXPECT_THROW(DerivationAlgebra::truncated(4, 0), ValidationError);
  EXPECT_THROW(alg.multiply(L("t^5"), L("1")), BoundOverflow);
}

TEST(CommVa, LaurentWindowOverflow) {
  const auto alg = DerivationAlgebra::laurent(3);
  EXPECT_EQ(alg.multiply(L("t^2"), L("t")), L("t^3"));
  EXPECT_THROW(alg.multiply(L("t^2"), L("t^2")), BoundOverflow);
}

template <class Check>
void for_grid(const DerivationAlgebra& alg, int reach, Check check) {
  std::vector<LaurentElement> xs;
  for (const auto& b : alg.basis())
    if (std::abs(b.min_exponent()) <= reach) xs.push_back(b);
  xs.push_back(L("1 + t"));
  for (const auto& u : xs)
    for (const auto& v : xs)
      for (const auto& w : xs) check(u, v, w);
}

// The generic identity templates hold on commutative vertex algebras.
TEST(CommVa, AxiomTemplatesHold) {
  for (const auto& alg : {DerivationAlgebra::truncated(5, 1), DerivationAlgebra::truncated(4, 2),
                          DerivationAlgebra::laurent(16)}) {
    const CommOps ops{alg};
    for_grid(alg, 2, [&](const LaurentElement& u, const LaurentElement& v, const LaurentElement& w) {
      for (int m = -3; m <= 3; ++m) {
        auto [s1, s2] = skew_sides(ops, u, m, v);
        EXPECT_EQ(s1, s2);
        auto [d1, d2] = d_mode_sides(ops, v, m, w);
        EXPECT_EQ(d1, d2);
        auto [c1, c2] = d_commutator_sides(ops, v, m, w);
        EXPECT_EQ(c1, c2);
        for (int n = -3; n <= 3; ++n) {
          auto [l, r] = commutator_sides(ops, u, m, v, n, w);
          EXPECT_EQ(l, r);
          auto [il, ir] = iterate_sides(ops, u, m, v, n, w);
          EXPECT_EQ(il, ir) << u.to_string() << " " << m << " " << v.to_string() << " " << n << " " << w.to_string();
        }
      }
      for (auto [l, r] : {zero_mode_skew_sides(ops, u, v), self_zero_mode_sides(ops, u),
                          minus_one_skew_sides(ops, u, v), zero_mode_d_sides(ops, u, v),
                          minus_one_mode_d_sides(ops, u, v)})
        EXPECT_EQ(l, r);
    });
  }
}

// A deliberately broken product must be caught by the same templates.
struct BrokenOps {
  const DerivationAlgebra& algebra;
  LaurentElement mode(const LaurentElement& u, int n, const LaurentElement& v) const {
    LaurentElement x = algebra.mode(u, n, v);
    return n == -2 ? Rational(2) * x : x;
  }
  LaurentElement d(const LaurentElement& v) const { return algebra.d_operator(v); }
  int top_index(const LaurentElement&, const LaurentElement&) const { return -1; }
};

TEST(CommVa, TemplatesDetectBrokenProduct) {
  const auto alg = DerivationAlgebra::laurent(12);
  const BrokenOps ops{alg};
  auto [l, r] = minus_one_mode_d_sides(ops, L("t^2"), L("t"));
  EXPECT_NE(l, r);
}

TEST(CommVa, RadicalMatchesFinDim) {
  for (const auto& alg : {DerivationAlgebra::truncated(4, 1), DerivationAlgebra::truncated(5, 2)}) {
    const auto fd = alg.to_findim();
    const auto basis = alg.basis();
    std::vector<std::vector<LaurentElement>> subspaces{{}, {basis[1]}, {basis[0] + basis[1]}, {basis[2], basis[3]},
                                                       {basis[0], basis[2]}, {basis[1] + basis[2], basis[3]}};
    std::vector<LaurentElement> elements = basis;
    elements.push_back(basis[0] + basis[1]);
    elements.push_back(basis[1] + basis[2]);
    for (const auto& sub : subspaces) {
      std::vector<AlgVector> gens;
      for (const auto& s : sub) gens.push_back(alg.to_coordinates(s));
      const auto u = Subspace::span(fd, gens);
      for (const auto& a : elements) {
        EXPECT_EQ(comm_radical_member(alg, a, sub), radical_member(alg.to_coordinates(a), u)) << a.to_string();
        EXPECT_EQ(comm_strong_radical_member(alg, a, sub), strong_radical_member(alg.to_coordinates(a), u))
            << a.to_string();
      }
    }
  }
}

TEST(LaurentRadical, Examples) {
  const auto v = laurent_radical_member(L("t^3"), 8, 8);
  EXPECT_EQ(v.status, Status::Proved);
  const auto w = laurent_radical_member(L("t + t^-1"), 8, 8);
  ASSERT_EQ(w.status, Status::Refuted);
  EXPECT_EQ(w.field("m"), "2");
  EXPECT_EQ(w.field("constant_term"), "2");
  EXPECT_EQ(laurent_radical_member(L("t + t^-1"), 8, 1).status, Status::Inconclusive);
  EXPECT_EQ(laurent_radical_member(L("0"), 8, 8).status, Status::Proved);
  EXPECT_EQ(laurent_radical_member(L("1"), 8, 8).status, Status::Refuted);
  EXPECT_THROW(laurent_radical_member(L("t^3 + t^-1"), 4, 8), BoundOverflow);
}

// Constant terms of powers against direct multinomial expansion of (t + c t^-1)^m.
TEST(LaurentRadical, FirstConstantTermPower) {
  for (int c = 1; c <= 3; ++c) {
    LaurentElement v = LaurentElement::monomial(1) + LaurentElement::monomial(-1, Rational(c));
    const auto r = laurent_radical_member(v, 12, 6);
    ASSERT_EQ(r.status, Status::Refuted);
    EXPECT_EQ(r.field("m"), "2");
    EXPECT_EQ(r.field("constant_term"), std::to_string(2 * c));
  }
  const auto r = laurent_radical_member(L("t^2 + t^-1"), 12, 6);
  ASSERT_EQ(r.status, Status::Refuted);
  EXPECT_EQ(r.field("m"), "3");  // t^2 t^-1 t^-1 in 3 orders
  EXPECT_EQ(r.field("constant_term"), "3");
}

}  // namespace
