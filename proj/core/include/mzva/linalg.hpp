#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mzva/rational.hpp"

namespace mzva {

// Sparse vector over Q as (key, coefficient) pairs sorted ascending by key,
// without zero entries.
template <class Key>
using SparseVector = std::vector<std::pair<Key, Rational>>;

// Incremental reduced row-echelon form over Q with keys of any ordered type.
// The pivot of a row is its largest key.  Each stored row optionally records
// the combination of inserted vectors it came from, which turns the echelon
// form into an exact linear solver.
template <class Key>
class Echelon {
 public:
  using Vector = SparseVector<Key>;
  using Combination = std::map<std::size_t, Rational>;

  // Inserts v as generator number inserted_count(); returns true when it was
  // independent of everything inserted before.
  bool insert(const Vector& v) {
    const std::size_t id = inserted_++;
    Work w = to_work(v);
    Combination comb{{id, Rational(1)}};
    reduce_in_place(w, &comb);
    if (w.empty()) return false;
    auto pivot_it = std::prev(w.end());
    Key pivot = pivot_it->first;
    Rational scale = Rational(1) / pivot_it->second;
    for (auto& [k, c] : w) c *= scale;
    for (auto& [i, c] : comb) c *= scale;
    // Keep rows fully reduced: eliminate the new pivot from existing rows.
    for (auto& [pk, row] : rows_) {
      auto it = row.vec.find(pivot);
      if (it == row.vec.end()) continue;
      Rational f = it->second;
      axpy(row.vec, w, -f);
      axpy(row.comb, comb, -f);
    }
    rows_.emplace(pivot, Row{std::move(w), std::move(comb)});
    return true;
  }

  // Canonical remainder of v modulo the span.
  Vector reduce(const Vector& v) const {
    Work w = to_work(v);
    reduce_in_place(w, nullptr);
    return Vector(w.begin(), w.end());
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  // Coefficients x (indexed by insertion order) with sum x_i v_i = target.
  std::optional<std::vector<Rational>> solve(const Vector& target) const {
    Work w = to_work(target);
    Combination used;
    for (auto it = w.rbegin(); it != w.rend();) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) return std::nullopt;
      Rational f = it->second;
      Key k = it->first;
      axpy(w, row->second.vec, -f);
      axpy(used, row->second.comb, f);
      it = std::make_reverse_iterator(w.lower_bound(k));
    }
    std::vector<Rational> x(inserted_);
    for (auto& [i, c] : used) x[i] = c;
    return x;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted_count() const { return inserted_; }

  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (const auto& [k, row] : rows_) out.emplace_back(row.vec.begin(), row.vec.end());
    return out;
  }

  std::vector<Key> pivots() const {
    std::vector<Key> out;
    for (const auto& [k, row] : rows_) out.push_back(k);
    return out;
  }

  bool has_pivot(const Key& k) const { return rows_.count(k) != 0; }

 private:
  using Work = std::map<Key, Rational>;
  struct Row {
    Work vec;
    Combination comb;
  };

  static Work to_work(const Vector& v) {
    Work w;
    for (const auto& [k, c] : v)
      if (!c.is_zero()) w[k] += c;
    for (auto it = w.begin(); it != w.end();) it = it->second.is_zero() ? w.erase(it) : std::next(it);
    return w;
  }

  template <class M>
  static void axpy(M& target, const M& source, const Rational& f) {
    for (const auto& [k, c] : source) {
      auto [it, inserted] = target.try_emplace(k, c * f);
      if (!inserted) {
        it->second += c * f;
        if (it->second.is_zero()) target.erase(it);
      }
    }
  }

  void reduce_in_place(Work& w, Combination* comb) const {
    // Walk keys from the top; rows are fully reduced so each pivot is handled once.
    for (auto it = w.rbegin(); it != w.rend();) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Rational f = it->second;
      Key k = it->first;
      axpy(w, row->second.vec, -f);
      if (comb) axpy(*comb, row->second.comb, -f);
      it = std::make_reverse_iterator(w.lower_bound(k));
    }
  }

  std::map<Key, Row> rows_;
  std::size_t inserted_ = 0;
};

// Dense helpers for the small matrices of the finite-dimensional layer.
using DenseVector = std::vector<Rational>;
using DenseMatrix = std::vector<DenseVector>;  // row-major

SparseVector<int> to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector<int>& v, std::size_t dim);

// Basis of {x : A x = 0} for an m x n matrix A.
std::vector<DenseVector> nullspace(const DenseMatrix& a, std::size_t columns);

}  // namespace mzva
