#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mzva/fock.hpp"
#include "mzva/linalg.hpp"
#include "mzva/rational.hpp"

namespace mzva {

// Named polynomial variables.  Positions are 0-based; for the Heisenberg
// quotient, position f-1 is the image of flavor f.
class VariableRoster {
 public:
  static VariableRoster fock(int d);   // x1..xd
  static VariableRoster image(int n);  // zeta1..zetan, then x1..xn
  static VariableRoster for_table(const FlavorTable& table);
  static VariableRoster named(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int position) const { return names_[position]; }
  std::optional<int> position_of(std::string_view name) const;

  bool operator==(const VariableRoster&) const = default;

 private:
  std::vector<std::string> names_;
};

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
class PolyElement {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit PolyElement(int nvars = 0) : nvars_(nvars) {}
  static PolyElement constant(int nvars, const Rational& c);
  static PolyElement variable(int nvars, int position);
  static PolyElement monomial(Exponents exps, const Rational& c = Rational(1));

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::span<const int> positions) const;

  void add_term(const Exponents& e, const Rational& c);

  PolyElement operator-() const;
  PolyElement& operator+=(const PolyElement& other);
  PolyElement& operator-=(const PolyElement& other);
  PolyElement& operator*=(const Rational& c);
  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
  friend PolyElement operator*(const PolyElement& a, const PolyElement& b);
  friend PolyElement operator*(const Rational& c, PolyElement a) { return a *= c; }

  PolyElement pow(int e) const;
  PolyElement partial(int position) const;
  Rational evaluate(std::span<const Rational> point) const;

  SparseVector<Exponents> to_sparse() const { return {terms_.begin(), terms_.end()}; }
  static PolyElement from_sparse(int nvars, const SparseVector<Exponents>& v);

  friend bool operator==(const PolyElement&, const PolyElement&) = default;

 private:
  int nvars_;
  TermMap terms_;
};

// All exponent vectors in nvars variables with total degree <= max_degree.
std::vector<Exponents> monomials_up_to(int nvars, int max_degree);

}  // namespace mzva
