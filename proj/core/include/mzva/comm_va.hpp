#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzva/findim.hpp"
#include "mzva/rational.hpp"
#include "mzva/verdict.hpp"

namespace mzva {

// Finite Laurent polynomial sum c_e t^e.
class LaurentElement {
 public:
  LaurentElement() = default;
  static LaurentElement monomial(int exponent, const Rational& c = Rational(1));

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  Rational constant_term() const { return coefficient(0); }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const Rational& c);
  LaurentElement& operator+=(const LaurentElement& other);
  LaurentElement& operator-=(const LaurentElement& other);
  LaurentElement& operator*=(const Rational& c);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(const Rational& c, LaurentElement a) { return a *= c; }

  std::string to_string() const;

  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

 private:
  std::map<int, Rational> terms_;
};

// Commutative algebra with derivation, viewed as a commutative vertex algebra
// with Y(a, z) b = (e^{z d} a) b.  Two carriers are supported: Q[t]/(t^k),
// where products past t^{k-1} vanish, and Laurent polynomials restricted to an
// exponent window [-E, E], where leaving the window raises BoundOverflow.  The
// derivation is d = t^s d/dt.
class DerivationAlgebra {
 public:
  enum class Carrier { Truncated, Laurent };

  // s >= 1 so that d preserves the ideal (t^k).
  static DerivationAlgebra truncated(int k, int derivation_shift = 1);
  static DerivationAlgebra laurent(int window, int derivation_shift = 0);

  Carrier carrier() const { return carrier_; }
  int low() const { return low_; }
  int high() const { return high_; }
  int dimension() const { return high_ - low_ + 1; }
  std::vector<LaurentElement> basis() const;
  LaurentElement unit() const { return LaurentElement::monomial(0); }

  LaurentElement multiply(const LaurentElement& a, const LaurentElement& b) const;
  LaurentElement derivation(const LaurentElement& a) const;

  // a_n b: zero for n >= 0, (d^j a / j!) b for n = -1 - j.
  LaurentElement mode(const LaurentElement& a, int n, const LaurentElement& b) const;
  LaurentElement d_operator(const LaurentElement& a) const { return mode(a, -2, unit()); }

  // Truncated carrier only: the same algebra as structure constants.
  FinDimAlgebra to_findim() const;
  AlgVector to_coordinates(const LaurentElement& a) const;

 private:
  DerivationAlgebra(Carrier c, int low, int high, int shift);
  void check_in_window(const LaurentElement& a) const;
  void validate_leibniz() const;

  Carrier carrier_;
  int low_;
  int high_;
  int shift_;
};

LaurentElement comm_mode_action(const DerivationAlgebra& algebra, const LaurentElement& a, int n,
                                const LaurentElement& b);

// r_{0,-1} membership of a for the subspace spanned by `subspace`, evaluated
// on all {0,-1}-strings of lengths in the finite-dimensional decision window.
bool comm_radical_member(const DerivationAlgebra& algebra, const LaurentElement& a,
                         const std::vector<LaurentElement>& subspace);
// sr_{0,-1}: additionally b_s(string) and (string)_s b for basis b, s in {0,-1}.
bool comm_strong_radical_member(const DerivationAlgebra& algebra, const LaurentElement& a,
                                const std::vector<LaurentElement>& subspace);

// Radical of the constant-term-zero subspace of Q[t, t^-1]: elements of
// tQ[t] or t^-1 Q[t^-1] are proved members; otherwise a power v^m (m <= powers)
// with nonzero constant term refutes.  Powers leaving [-window, window] raise
// BoundOverflow.
Verdict laurent_radical_member(const LaurentElement& v, int window, int powers);

}  // namespace mzva
