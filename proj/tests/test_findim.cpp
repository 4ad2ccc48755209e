#include <gtest/gtest.h>

#include "findim_corpus.hpp"
#include "mzva/errors.hpp"
#include "mzva/findim.hpp"

using namespace mzva;

namespace {

AlgVector vec(std::initializer_list<int> xs) {
  AlgVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

TEST(FinDim, TruncatedPolynomialProducts) {
  const auto a = FinDimAlgebra::truncated_polynomial(3);
  EXPECT_EQ(a.multiply(vec({0, 1, 0}), vec({0, 1, 0})), vec({0, 0, 1}));
  EXPECT_EQ(a.power(vec({0, 1, 0}), 3), vec({0, 0, 0}));
  EXPECT_EQ(a.power(vec({1, 1, 0}), 2), vec({1, 2, 1}));
  EXPECT_EQ(a.power(vec({0, 1, 0}), 0), a.unit());
}

TEST(FinDim, ParseMatchesBuiltin) {
  const auto parsed = FinDimAlgebra::parse(
      "dim 3\nlabels 1 x x^2\nunit 1 0 0\n"
      "const 1 1 1 1\nconst 1 2 2 1\nconst 2 1 2 1\nconst 1 3 3 1\nconst 3 1 3 1\nconst 2 2 3 1\n");
  const auto built = FinDimAlgebra::truncated_polynomial(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(parsed.multiply(parsed.basis_vector(i), parsed.basis_vector(j)),
                built.multiply(built.basis_vector(i), built.basis_vector(j)));
}

TEST(FinDim, ParseErrorsNameTheLine) {
  try {
    FinDimAlgebra::parse("dim 2\nunit 1 0\nconst 1 1 1 1\nconst 1 2 2 1\nconst 2 1 2 1\nconst 3 1 1 1\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos) << e.what();
  }
  EXPECT_THROW(FinDimAlgebra::parse("unit 1\n"), ValidationError);
  // e1 e2 = 0, so e1 is not a unit.
  EXPECT_THROW(FinDimAlgebra::parse("dim 2\nunit 1 0\nconst 1 1 1 1\nconst 2 2 2 1\n"), ValidationError);
}

TEST(FinDim, RejectsNonCommutativeTable) {
  std::vector<FinDimAlgebra::Constant> cs{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  EXPECT_NO_THROW(FinDimAlgebra::create({"1", "e"}, vec({1, 0}), cs));
  cs.push_back({0, 1, 0, 1});
  EXPECT_THROW(FinDimAlgebra::create({"1", "e"}, vec({1, 0}), cs), ValidationError);
}

TEST(Nilradical, Examples) {
  const auto a = FinDimAlgebra::truncated_polynomial(3);
  EXPECT_TRUE(nilradical(a).same_as(Subspace::span(a, {vec({0, 1, 0}), vec({0, 0, 1})})));
  const auto t = FinDimAlgebra::tensor(FinDimAlgebra::truncated_polynomial(2, "x"),
                                       FinDimAlgebra::truncated_polynomial(2, "y"));
  EXPECT_EQ(nilradical(t).dimension(), 3);
  EXPECT_FALSE(nilradical(t).contains(t.unit()));
  EXPECT_TRUE(is_local(t));
  EXPECT_EQ(nilradical(FinDimAlgebra::split(3)).dimension(), 0);
  EXPECT_FALSE(is_local(FinDimAlgebra::split(2)));
}

// Every nilradical basis vector is nilpotent; every vector outside is not.
TEST(Nilradical, ElementsAreNilpotent) {
  for (const auto& a : local_algebra_corpus()) {
    const auto nil = nilradical(a);
    for (const auto& v : nil.basis()) EXPECT_EQ(a.power(v, a.dim()), a.zero());
    for (const auto& v : element_corpus(a))
      EXPECT_EQ(nil.contains(v), a.power(v, a.dim()) == a.zero());
  }
}

TEST(Radical, Examples) {
  const auto a = FinDimAlgebra::truncated_polynomial(3);
  const auto x = Subspace::span(a, {vec({0, 1, 0})});
  EXPECT_TRUE(radical_member(vec({0, 1, 0}), x));
  EXPECT_TRUE(strong_radical_member(vec({0, 1, 0}), x));
  const auto one_x = Subspace::span(a, {vec({1, 1, 0})});
  EXPECT_FALSE(radical_member(vec({1, 1, 0}), one_x));
  EXPECT_EQ(radical_window(a).first, 3);
  EXPECT_EQ(radical_window(a).last, 7);
}

TEST(Radical, WindowMatchesBruteForce) {
  std::vector<FinDimAlgebra> algebras = local_algebra_corpus();
  algebras.push_back(FinDimAlgebra::split(2));
  algebras.push_back(FinDimAlgebra::tensor(FinDimAlgebra::split(2), FinDimAlgebra::truncated_polynomial(2)));
  for (const auto& a : algebras) {
    if (a.dim() > 6) continue;  // the dim-8 algebra is covered by the acceptance run
    for (const auto& gens : generator_corpus(a)) {
      const auto u = Subspace::span(a, gens);
      for (const auto& x : element_corpus(a)) {
        EXPECT_EQ(radical_member(x, u), radical_oracle(x, u));
        EXPECT_EQ(strong_radical_member(x, u), strong_radical_oracle(x, u));
      }
    }
  }
}

TEST(MzVerdict, Examples) {
  const auto a = FinDimAlgebra::truncated_polynomial(3);
  const auto v1 = mz_verdict(Subspace::span(a, {vec({0, 1, 0})}));
  EXPECT_EQ(v1.status, Status::Proved);
  EXPECT_EQ(v1.field("radical"), "nilradical");
  const auto v2 = mz_verdict(Subspace::span(a, {vec({1, 0, 0}), vec({0, 1, 0})}));
  EXPECT_EQ(v2.status, Status::Refuted);
  EXPECT_EQ(v2.field("b"), "x^2");
  EXPECT_EQ(mz_verdict(Subspace::whole(a)).status, Status::Proved);
  EXPECT_EQ(mz_verdict(Subspace::span(FinDimAlgebra::split(2), {})).status, Status::Inconclusive);
}

// The refutation witness really is a radical element outside the strong radical.
TEST(MzVerdict, RefutationsAreGenuine) {
  for (const auto& a : local_algebra_corpus()) {
    if (a.dim() > 6) continue;
    for (const auto& gens : generator_corpus(a)) {
      const auto u = Subspace::span(a, gens);
      const auto v = mz_verdict(u);
      if (v.status != Status::Refuted) continue;
      EXPECT_TRUE(radical_oracle(a.unit(), u));
      EXPECT_FALSE(strong_radical_oracle(a.unit(), u));
    }
  }
}

TEST(Hom, QuotientPreimage) {
  const auto a = FinDimAlgebra::truncated_polynomial(3);
  const auto i = Subspace::span(a, {vec({0, 0, 1})});
  const auto q = AlgebraHom::quotient(a, i);
  EXPECT_EQ(q.target().dim(), 2);
  const auto u = Subspace::span(q.target(), {vec({0, 1})});
  EXPECT_TRUE(hom_preimage(q, u).same_as(Subspace::span(a, {vec({0, 1, 0}), vec({0, 0, 1})})));
  EXPECT_TRUE(hom_image(q, Subspace::span(a, {vec({0, 1, 1})})).same_as(u));
  EXPECT_THROW(AlgebraHom::quotient(a, Subspace::span(a, {vec({1, 1, 0})})), ValidationError);
}

TEST(Hom, EvaluationKernel) {
  const auto a = FinDimAlgebra::truncated_polynomial(3);
  const auto q = FinDimAlgebra::truncated_polynomial(1);
  const auto ev = AlgebraHom::create(a, q, {vec({1, 0, 0})});
  EXPECT_TRUE(hom_preimage(ev, Subspace::zero(q)).same_as(Subspace::span(a, {vec({0, 1, 0}), vec({0, 0, 1})})));
  EXPECT_THROW(AlgebraHom::create(a, q, {vec({1, 1, 0})}), ValidationError);
}

}  // namespace
