#include <gtest/gtest.h>

#include "mzva/parse.hpp"
#include "mzva/poly.hpp"

using namespace mzva;

namespace {

PolyElement P(const char* text, int nvars = 2) { return parse_poly(text, VariableRoster::fock(nvars)); }

TEST(Poly, Arithmetic) {
  EXPECT_EQ(P("x1 + x2") * P("x1 - x2"), P("x1^2 - x2^2"));
  EXPECT_EQ(P("x1 + 1").pow(3), P("x1^3 + 3 * x1^2 + 3 * x1 + 1"));
  EXPECT_EQ(P("x1 + 1").pow(0), P("1"));
  EXPECT_TRUE((P("x1 x2") - P("x2 x1")).is_zero());
  EXPECT_EQ(P("0").total_degree(), -1);
  EXPECT_EQ(P("x1^2 x2 + x2").total_degree(), 3);
  const int pos[] = {1};
  EXPECT_EQ(P("x1^2 x2 + x2^4").degree_in(pos), 4);
}

TEST(Poly, PartialAndEvaluate) {
  EXPECT_EQ(P("x1^3 x2 + 5 * x2").partial(0), P("3 * x1^2 x2"));
  EXPECT_EQ(P("x1^3 x2 + 5 * x2").partial(1), P("x1^3 + 5"));
  const Rational pt[] = {2, -1};
  EXPECT_EQ(P("x1^3 x2 + 5 * x2").evaluate(pt), Rational(-13));
}

// Leibniz rule for partial derivatives on a small product grid.
TEST(Poly, PartialIsADerivation) {
  const char* corpus[] = {"1", "x1", "x2^2 - x1", "1/2 * x1 x2 + 3", "x1^3 - x2^3 + x1 x2"};
  for (const char* a : corpus)
    for (const char* b : corpus)
      for (int i = 0; i < 2; ++i)
        EXPECT_EQ((P(a) * P(b)).partial(i), P(a).partial(i) * P(b) + P(a) * P(b).partial(i)) << a << " " << b;
}

TEST(Poly, MonomialCountIsBinomial) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d)
      EXPECT_EQ(Rational(static_cast<long long>(monomials_up_to(n, d).size())), binomial(n + d, d));
}

TEST(Poly, ImageRosterOrder) {
  const auto r = VariableRoster::image(2);
  ASSERT_EQ(r.size(), 4);
  EXPECT_EQ(r.name(0), "zeta1");
  EXPECT_EQ(r.name(1), "zeta2");
  EXPECT_EQ(r.name(2), "x1");
  EXPECT_EQ(r.name(3), "x2");
}

}  // namespace
