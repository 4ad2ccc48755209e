#pragma once

#include <string>
#include <vector>

#include "mzva/findim.hpp"

// Local algebras Q[x]/(x^k), k = 1..5, and three tensor products of dimension
// 4, 6 and 8.
inline std::vector<mzva::FinDimAlgebra> local_algebra_corpus() {
  using mzva::FinDimAlgebra;
  std::vector<FinDimAlgebra> out;
  for (int k = 1; k <= 5; ++k) out.push_back(FinDimAlgebra::truncated_polynomial(k));
  const auto x2 = FinDimAlgebra::truncated_polynomial(2, "x");
  const auto y2 = FinDimAlgebra::truncated_polynomial(2, "y");
  const auto z2 = FinDimAlgebra::truncated_polynomial(2, "z");
  out.push_back(FinDimAlgebra::tensor(x2, y2));
  out.push_back(FinDimAlgebra::tensor(FinDimAlgebra::truncated_polynomial(3, "x"), y2));
  out.push_back(FinDimAlgebra::tensor(x2, FinDimAlgebra::tensor(y2, z2)));
  return out;
}

// Generator sets: the empty set, every single basis vector, every pair of
// basis vectors, every 1 + e_i, and every e_i + e_j with i < j, each alone
// and together with e_last.
inline std::vector<std::vector<mzva::AlgVector>> generator_corpus(const mzva::FinDimAlgebra& a) {
  const int n = a.dim();
  std::vector<std::vector<mzva::AlgVector>> out{{}};
  for (int i = 0; i < n; ++i) out.push_back({a.basis_vector(i)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({a.basis_vector(i), a.basis_vector(j)});
  auto add = [](mzva::AlgVector x, const mzva::AlgVector& y) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return x;
  };
  for (int i = 1; i < n; ++i) {
    out.push_back({add(a.unit(), a.basis_vector(i))});
    out.push_back({add(a.unit(), a.basis_vector(i)), a.basis_vector(n - 1)});
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back({add(a.basis_vector(i), a.basis_vector(j))});
      out.push_back({add(a.basis_vector(i), a.basis_vector(j)), a.basis_vector(n - 1)});
    }
  return out;
}

// Query elements: basis vectors, 1 + e_i, and e_i + e_j.
inline std::vector<mzva::AlgVector> element_corpus(const mzva::FinDimAlgebra& a) {
  std::vector<mzva::AlgVector> out;
  const int n = a.dim();
  for (int i = 0; i < n; ++i) out.push_back(a.basis_vector(i));
  for (int i = 1; i < n; ++i) {
    auto v = a.unit();
    v[i] += mzva::Rational(1);
    out.push_back(v);
    for (int j = i + 1; j < n; ++j) {
      auto w = a.basis_vector(i);
      w[j] += mzva::Rational(1);
      out.push_back(w);
    }
  }
  return out;
}

// Brute force over t in [n, 4n].
inline bool radical_oracle(const mzva::AlgVector& x, const mzva::Subspace& u) {
  const auto& a = u.ambient();
  for (int t = a.dim(); t <= 4 * a.dim(); ++t)
    if (!u.contains(a.power(x, t))) return false;
  return true;
}

inline bool strong_radical_oracle(const mzva::AlgVector& x, const mzva::Subspace& u) {
  const auto& a = u.ambient();
  for (int t = a.dim(); t <= 4 * a.dim(); ++t) {
    const auto p = a.power(x, t);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        if (!u.contains(a.multiply(a.multiply(a.basis_vector(i), p), a.basis_vector(j)))) return false;
  }
  return true;
}
