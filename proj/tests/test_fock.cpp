#include <gtest/gtest.h>

#include "mzva/errors.hpp"
#include "mzva/fock.hpp"
#include "mzva/parse.hpp"

using namespace mzva;

namespace {

FockElement F(const char* text, const FlavorTable& t) { return parse_fock(text, t); }

// alpha_f(m) on a monomial, pushed through the creation operators directly:
// [alpha_f(m), alpha_g(-k)] = m (f, g) delta_{m,k}.
FockElement heisenberg_oracle(const FlavorTable& t, int f, int m, const FockMonomial& v) {
  if (m < 0) return FockElement::monomial(v.with({f, -m}));
  FockElement out;
  if (m == 0) return out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto g = v.factor(j);
    if (g.mode != m) continue;
    out += FockElement::monomial(v.without_index(j), Rational(m) * t.form(f, g.flavor));
  }
  return out;
}

FockElement heisenberg_oracle(const FlavorTable& t, int f, int m, const FockElement& v) {
  FockElement out;
  for (const auto& [mono, c] : v.terms()) out += c * heisenberg_oracle(t, f, m, mono);
  return out;
}

// L(m) = 1/2 sum_j :alpha(m - j) alpha(j): on orthonormal flavors.
FockElement virasoro_oracle(const FlavorTable& t, int m, const FockElement& v) {
  FockElement out;
  const int reach = v.max_weight() + std::abs(m) + 2;
  for (int f = 1; f <= t.dim(); ++f)
    for (int j = -reach; j <= reach; ++j) {
      int left = m - j, right = j;
      if (left > right) std::swap(left, right);  // annihilator on the right
      out += Rational(1, 2) * heisenberg_oracle(t, f, left, heisenberg_oracle(t, f, right, v));
    }
  return out;
}

// Number of d-colored partitions of n, from prod_k (1 - q^k)^{-d}.
long long colored_partitions(int d, int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int color = 0; color < d; ++color)
    for (int k = 1; k <= n; ++k)
      for (int w = k; w <= n; ++w) c[w] += c[w - k];
  return c[n];
}

TEST(FockMonomial, CanonicalOrder) {
  const auto t = FlavorTable::orthonormal(2);
  const std::pair<int, int> a[] = {{2, 1}, {1, 3}, {1, 1}};
  const std::pair<int, int> b[] = {{1, 1}, {2, 1}, {1, 3}};
  EXPECT_EQ(make_monomial(t, a), make_monomial(t, b));
  EXPECT_EQ(make_monomial(t, a).weight(), 5);
  EXPECT_EQ(make_monomial(t, a).factor(0).mode, 3);
  EXPECT_EQ(make_monomial(t, a).factor(1).flavor, 1);
  const std::pair<int, int> bad_mode[] = {{1, 0}};
  const std::pair<int, int> bad_flavor[] = {{3, 1}};
  EXPECT_THROW(make_monomial(t, bad_mode), ValidationError);
  EXPECT_THROW(make_monomial(t, bad_flavor), ValidationError);
}

TEST(FockMonomial, BasisCountsMatchColoredPartitions) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 7; ++n)
      EXPECT_EQ(static_cast<long long>(basis_monomials(FlavorTable::orthonormal(d), n).size()),
                colored_partitions(d, n))
          << "d=" << d << " n=" << n;
}

TEST(FockElement, WeightOfZeroThrows) {
  EXPECT_THROW(weight(FockElement{}), ValidationError);
  const auto t = FlavorTable::orthonormal(1);
  EXPECT_EQ(weight(F("a1(-3) vac", t)), 3);
  EXPECT_EQ(weight(F("a1(-3) vac + vac", t)), std::nullopt);
}

TEST(GeneratorAction, Examples) {
  const auto t = FlavorTable::orthonormal(1);
  ModeEngine e(t);
  EXPECT_EQ(e.generator_mode_action(1, 2, F("a1(-2) vac", t)), F("2 vac", t));
  EXPECT_TRUE(e.generator_mode_action(1, 0, F("a1(-2) a1(-1) vac", t)).is_zero());
}

TEST(GeneratorAction, MatchesCommutatorOracle) {
  for (int d = 1; d <= 2; ++d) {
    const auto t = FlavorTable::orthonormal(d);
    ModeEngine e(t);
    for (const auto& v : basis_monomials_up_to(t, 5))
      for (int f = 1; f <= d; ++f)
        for (int m = -4; m <= 5; ++m)
          EXPECT_EQ(e.generator_mode_action(f, m, v), heisenberg_oracle(t, f, m, v));
  }
}

TEST(ModeAction, SpecExamples) {
  const auto t = FlavorTable::orthonormal(1);
  ModeEngine e(t);
  const auto a = F("a1(-1) vac", t);
  EXPECT_EQ(e.mode_action(a, 1, a), F("vac", t));
  EXPECT_EQ(e.mode_action(e.conformal_vector().element, 1, F("a1(-3) vac", t)), F("3 * a1(-3) vac", t));
  EXPECT_EQ(e.mode_action(F("a1(-1) a1(-1) vac", t), 0, a), F("2 * a1(-2) vac", t));
  EXPECT_EQ(e.d_operator(a), F("a1(-2) vac", t));
  EXPECT_EQ(e.d_operator(F("a1(-2) vac", t)), F("2 * a1(-3) vac", t));
}

// The generator state a(-1)1 acts by alpha(n).
TEST(ModeAction, GeneratorStateActsByModes) {
  const auto t = FlavorTable::orthonormal(2);
  ModeEngine e(t);
  for (int f = 1; f <= 2; ++f) {
    const std::pair<int, int> p[] = {{f, 1}};
    const auto gen = FockElement::monomial(make_monomial(t, p));
    for (const auto& v : basis_monomials_up_to(t, 4))
      for (int n = -3; n <= 4; ++n)
        EXPECT_EQ(e.mode_action(gen, n, FockElement::monomial(v)), heisenberg_oracle(t, f, n, v));
  }
}

TEST(ModeAction, VacuumProperties) {
  const auto t = FlavorTable::orthonormal(2);
  ModeEngine e(t);
  const auto vac = FockElement::monomial(FockMonomial{});
  for (const auto& um : basis_monomials_up_to(t, 4)) {
    const auto u = FockElement::monomial(um);
    EXPECT_EQ(e.mode_action(u, -1, vac), u);
    for (int n = 0; n <= 4; ++n) EXPECT_TRUE(e.mode_action(u, n, vac).is_zero());
    for (int n = -4; n <= 4; ++n) EXPECT_EQ(e.mode_action(vac, n, u), n == -1 ? u : FockElement{});
  }
}

TEST(ModeAction, Grading) {
  const auto t = FlavorTable::orthonormal(2);
  ModeEngine e(t);
  for (const auto& u : basis_monomials_up_to(t, 3))
    for (const auto& v : basis_monomials_up_to(t, 3))
      for (int n = -3; n <= 5; ++n) {
        const auto& x = e.mode_action(u, n, v);
        if (!x.is_zero()) {
          EXPECT_EQ(x.homogeneous_weight(), u.weight() + v.weight() - n - 1);
        }
      }
}

TEST(ModeAction, BoundOverflow) {
  const auto t = FlavorTable::orthonormal(1);
  ModeEngine e(t, EngineOptions{3});
  const auto a = F("a1(-1) vac", t);
  EXPECT_NO_THROW(e.mode_action(a, -1, F("a1(-1) a1(-1) vac", t)));
  EXPECT_THROW(e.mode_action(a, -2, F("a1(-1) a1(-1) vac", t)), BoundOverflow);
}

TEST(NormalOrderOracle, AgreesWithEngine) {
  for (int d = 1; d <= 2; ++d) {
    const auto t = FlavorTable::orthonormal(d);
    ModeEngine e(t);
    for (const auto& u : basis_monomials_up_to(t, 3))
      for (const auto& v : basis_monomials_up_to(t, 3))
        for (int n = -3; n <= 3; ++n)
          EXPECT_EQ(e.mode_action(u, n, v), normal_order_oracle(t, u, n, FockElement::monomial(v)));
  }
}

TEST(NormalOrderOracle, AgreesOnNonOrthogonalForm) {
  const auto t = FlavorTable::with_gram({"a1", "a2"}, {2, 1, 1, 3});
  ModeEngine e(t);
  for (const auto& u : basis_monomials_up_to(t, 3))
    for (const auto& v : basis_monomials_up_to(t, 2))
      for (int n = -2; n <= 3; ++n)
        EXPECT_EQ(e.mode_action(u, n, v), normal_order_oracle(t, u, n, FockElement::monomial(v)));
}

TEST(Virasoro, Examples) {
  const auto t = FlavorTable::orthonormal(1);
  ModeEngine e(t);
  const auto a = F("a1(-1) vac", t);
  const auto& omega = e.conformal_vector();
  EXPECT_EQ(omega.element, F("1/2 * a1(-1) a1(-1) vac", t));
  EXPECT_EQ(omega.central_charge, 1);
  EXPECT_EQ(e.virasoro_mode(0, a), a);
  EXPECT_EQ(e.virasoro_mode(-1, a), F("a1(-2) vac", t));
  EXPECT_EQ(e.virasoro_mode(2, omega.element), F("1/2 vac", t));
}

TEST(Virasoro, MatchesSugawaraOracle) {
  for (int d = 1; d <= 2; ++d) {
    const auto t = FlavorTable::orthonormal(d);
    ModeEngine e(t);
    for (const auto& vm : basis_monomials_up_to(t, 4)) {
      const auto v = FockElement::monomial(vm);
      for (int m = -3; m <= 3; ++m) EXPECT_EQ(e.virasoro_mode(m, v), virasoro_oracle(t, m, v));
    }
  }
}

TEST(Virasoro, CentralChargeForGeneralForm) {
  const auto t = FlavorTable::with_gram({"a1", "a2"}, {2, 1, 1, 3});
  ModeEngine e(t);
  EXPECT_EQ(e.conformal_vector().central_charge, 2);
  const auto omega = e.conformal_vector().element;
  EXPECT_EQ(e.virasoro_mode(2, omega), FockElement::monomial(FockMonomial{}, Rational(1)));
  for (const auto& vm : basis_monomials_up_to(t, 3)) {
    const auto v = FockElement::monomial(vm);
    EXPECT_EQ(e.virasoro_mode(0, v), Rational(vm.weight()) * v);
  }
}

TEST(Virasoro, DegenerateFormRejected) {
  const auto t = FlavorTable::with_gram({"a1", "a2"}, {1, 1, 1, 1});
  ModeEngine e(t);
  EXPECT_THROW(e.conformal_vector(), ValidationError);
}

}  // namespace
