#include <gtest/gtest.h>

#include "mzva/c2.hpp"
#include "mzva/parse.hpp"

using namespace mzva;

namespace {

FockElement F(const char* text, const FlavorTable& t) { return parse_fock(text, t); }
PolyElement P(const char* text, int d) { return parse_poly(text, VariableRoster::fock(d)); }

TEST(CnSpan, SmallBounds) {
  const auto t = FlavorTable::orthonormal(1);
  ModeEngine e(t);
  const CnSpan c22 = cn_spanning_set(e, 2, 2);
  EXPECT_EQ(c22.dimension(), 1u);
  EXPECT_TRUE(c22.contains(F("a1(-2) vac", t)));
  EXPECT_FALSE(c22.contains(F("a1(-1) a1(-1) vac", t)));
  EXPECT_EQ(cn_spanning_set(e, 3, 2).dimension(), 0u);
  EXPECT_EQ(cn_spanning_set(e, 3, 3).dimension(), 1u);
}

TEST(CnSpan, C2EqualsModeTwoSpan) {
  for (int d = 1; d <= 2; ++d) {
    const auto t = FlavorTable::orthonormal(d);
    ModeEngine e(t);
    for (int bound = 1; bound <= 4; ++bound)
      EXPECT_TRUE(cn_spanning_set(e, 2, bound).same_span(mode_two_monomial_span(t, bound))) << d << " " << bound;
  }
}

// Graded dimension of C2 = (all monomials) - (monomials with every mode 1).
TEST(CnSpan, C2DimensionCountsMonomials) {
  const auto t = FlavorTable::orthonormal(2);
  const int bound = 5;
  std::size_t expected = 0;
  for (const auto& m : basis_monomials_up_to(t, bound))
    if (m.size() != static_cast<std::size_t>(m.weight())) ++expected;
  EXPECT_EQ(mode_two_monomial_span(t, bound).dimension(), expected);
}

TEST(Reduce, Examples) {
  const auto t = FlavorTable::orthonormal(2);
  EXPECT_EQ(c2_reduce(F("a1(-1) a1(-1) vac", t), 2), P("x1^2", 2));
  EXPECT_TRUE(c2_reduce(F("a1(-2) a1(-1) vac", t), 2).is_zero());
  EXPECT_EQ(c2_reduce(F("3 * a2(-1) a1(-1) vac - a1(-3) vac + 2", t), 2), P("3 * x1 x2 + 2", 2));
  EXPECT_TRUE(in_c2(F("a1(-2) vac + a2(-3) a1(-1) vac", t)));
  EXPECT_FALSE(in_c2(F("a1(-2) vac + a1(-1) vac", t)));
}

TEST(Reduce, LiftIsSection) {
  const char* corpus[] = {"0", "1", "x1", "x1^2 x2 - 1/3", "x2^4 + x1 x2 + 7"};
  for (const char* p : corpus) EXPECT_EQ(c2_reduce(c2_lift(P(p, 2)), 2), P(p, 2)) << p;
}

TEST(Poisson, ProductExamples) {
  const auto t = FlavorTable::orthonormal(1);
  ModeEngine e(t);
  const auto a = F("a1(-1) vac", t);
  EXPECT_EQ(poisson_product(e, a, a), P("x1^2", 1));
  EXPECT_TRUE(poisson_product(e, F("a1(-2) vac", t), a).is_zero());
  for (const auto& b : basis_monomials_up_to(t, 4)) {
    const auto bv = FockElement::monomial(b);
    EXPECT_EQ(poisson_product(e, F("vac", t), bv), c2_reduce(bv, 1));
  }
}

// The -1 product reduces to the polynomial product.
TEST(Poisson, ReductionIsMultiplicative) {
  const auto t = FlavorTable::orthonormal(2);
  ModeEngine e(t);
  const auto basis = basis_monomials_up_to(t, 3);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto av = FockElement::monomial(a), bv = FockElement::monomial(b);
      EXPECT_EQ(poisson_product(e, av, bv), c2_reduce(av, 2) * c2_reduce(bv, 2));
    }
}

TEST(Poisson, BracketVanishes) {
  const auto t = FlavorTable::orthonormal(2);
  ModeEngine e(t);
  const auto basis = basis_monomials_up_to(t, 3);
  for (const auto& a : basis)
    for (const auto& b : basis)
      EXPECT_TRUE(poisson_bracket(e, FockElement::monomial(a), FockElement::monomial(b)).is_zero());
}

}  // namespace
