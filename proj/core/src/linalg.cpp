#include "mzva/linalg.hpp"

namespace mzva {

SparseVector<int> to_sparse(const DenseVector& v) {
  SparseVector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

DenseVector to_dense(const SparseVector<int>& v, std::size_t dim) {
  DenseVector out(dim);
  for (const auto& [i, c] : v) out[static_cast<std::size_t>(i)] = c;
  return out;
}

std::vector<DenseVector> nullspace(const DenseMatrix& a, std::size_t columns) {
  DenseMatrix m = a;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < columns; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<DenseVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    DenseVector v(columns);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mzva
