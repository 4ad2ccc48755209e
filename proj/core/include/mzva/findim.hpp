#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzva/linalg.hpp"
#include "mzva/rational.hpp"
#include "mzva/verdict.hpp"

// Mathieu-Zhao analysis on finite-dimensional commutative unital Q-algebras.
//
// Deciding eventual membership.  For a in A (dim A = n) and a subspace U,
// write s_t for the image of a^t in A/U.  Then s_t = P L_a^t 1, where L_a is
// multiplication by a and P the projection to A/U.  Split A = N + R along the
// Fitting decomposition of L_a: L_a is nilpotent on N (so vanishes there from
// the n-th power on) and invertible on R.  For t >= n only the R-part
// survives, and on R the sequence obeys a linear recurrence of order <= n with
// nonzero constant coefficient; such a sequence that vanishes on n consecutive
// indices vanishes everywhere.  Hence a^t lies in U for all large t iff it does
// for every t in [n, 2n-1]; the code checks the slightly wider [n, 2n+1].  The
// same argument applies verbatim to each sequence b a^t c.

namespace mzva {

using AlgVector = DenseVector;

class FinDimAlgebra {
 public:
  // e_i * e_j = sum_k value e_k; indices are 0-based here and 1-based in files.
  struct Constant {
    int i, j, k;
    Rational value;
  };

  // Validates commutativity, associativity and the unit law on all basis
  // vectors; throws ValidationError naming the first failure.
  static FinDimAlgebra create(std::vector<std::string> labels, AlgVector unit,
                              const std::vector<Constant>& constants);
  // Text format, one directive per line ('#' starts a comment):
  //   dim N / labels L1 .. LN / unit c1 .. cN / const i j k value
  // Errors carry the offending line number.
  static FinDimAlgebra parse(std::string_view text);

  static FinDimAlgebra truncated_polynomial(int k, const std::string& var = "x");
  static FinDimAlgebra split(int copies);
  static FinDimAlgebra tensor(const FinDimAlgebra& a, const FinDimAlgebra& b);

  int dim() const;
  const std::vector<std::string>& labels() const;
  const AlgVector& unit() const;
  AlgVector basis_vector(int i) const;
  AlgVector zero() const { return AlgVector(static_cast<std::size_t>(dim())); }

  AlgVector multiply(const AlgVector& a, const AlgVector& b) const;
  // a^t for t >= 0 (a^0 = 1).
  AlgVector power(const AlgVector& a, int t) const;
  DenseMatrix multiplication_matrix(const AlgVector& a) const;
  std::string format(const AlgVector& v) const;

 private:
  struct Data {
    std::vector<std::string> labels;
    AlgVector unit;
    std::vector<std::vector<AlgVector>> table;  // table[i][j] = e_i e_j
  };
  std::shared_ptr<const Data> data_;
};

class Subspace {
 public:
  static Subspace span(const FinDimAlgebra& ambient, const std::vector<AlgVector>& generators);
  static Subspace whole(const FinDimAlgebra& ambient);
  static Subspace zero(const FinDimAlgebra& ambient);
  // Lines "vector c1 .. cN"; no lines means the zero subspace.
  static Subspace parse(const FinDimAlgebra& ambient, std::string_view text);

  const FinDimAlgebra& ambient() const { return ambient_; }
  int dimension() const { return static_cast<int>(echelon_.rank()); }
  std::vector<AlgVector> basis() const;

  bool contains(const AlgVector& v) const;
  AlgVector reduce(const AlgVector& v) const;
  bool contains_unit() const { return contains(ambient_.unit()); }
  bool is_whole() const { return dimension() == ambient_.dim(); }
  bool is_ideal() const;
  bool same_as(const Subspace& other) const;

 private:
  explicit Subspace(FinDimAlgebra ambient) : ambient_(std::move(ambient)) {}

  FinDimAlgebra ambient_;
  Echelon<int> echelon_;
};

class AlgebraHom {
 public:
  // matrix has target.dim() rows and source.dim() columns.  Validates that the
  // unit maps to the unit and products are preserved on basis pairs.
  static AlgebraHom create(FinDimAlgebra source, FinDimAlgebra target, DenseMatrix matrix);
  static AlgebraHom identity(const FinDimAlgebra& a);
  // Projection A -> A/I; throws ValidationError when I is not an ideal.
  static AlgebraHom quotient(const FinDimAlgebra& a, const Subspace& ideal);

  const FinDimAlgebra& source() const { return source_; }
  const FinDimAlgebra& target() const { return target_; }
  AlgVector apply(const AlgVector& v) const;

 private:
  AlgebraHom(FinDimAlgebra s, FinDimAlgebra t, DenseMatrix m)
      : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}

  FinDimAlgebra source_;
  FinDimAlgebra target_;
  DenseMatrix matrix_;
};

// Nilpotent elements, as the kernel of the trace form (a, b) -> tr(L_{ab});
// valid in characteristic 0.
Subspace nilradical(const FinDimAlgebra& a);

// dim A - dim nilradical == 1.
bool is_local(const FinDimAlgebra& a);

struct PowerWindow {
  int first;
  int last;
};
PowerWindow radical_window(const FinDimAlgebra& a);

bool radical_member(const AlgVector& a, const Subspace& u);
bool strong_radical_member(const AlgVector& a, const Subspace& u);

// Decided only over local ambient algebras, where the only idempotents are 0
// and 1; otherwise Inconclusive.
Verdict mz_verdict(const Subspace& u);

Subspace hom_preimage(const AlgebraHom& f, const Subspace& u);
Subspace hom_image(const AlgebraHom& f, const Subspace& u);

}  // namespace mzva
