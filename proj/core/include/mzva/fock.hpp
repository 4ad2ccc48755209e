#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mzva/rational.hpp"

namespace mzva {

// Flavors of the Heisenberg algebra: generator names and the Gram matrix of
// the bilinear form.  Flavor ids are 1-based throughout the public API.
class FlavorTable {
 public:
  // d flavors a1..ad with the identity Gram matrix.
  static FlavorTable orthonormal(int d);
  // 2n flavors: a1..an (the alpha^i, ordered first) then b1..bn (the beta^i),
  // orthonormal within each block and orthogonal across blocks.
  static FlavorTable image_configuration(int n);
  // Arbitrary symmetric Gram matrix given row-major.
  static FlavorTable with_gram(std::vector<std::string> names, std::vector<Rational> gram);

  int dim() const { return static_cast<int>(names_.size()); }
  const Rational& form(int i, int j) const { return gram_[(i - 1) * dim() + (j - 1)]; }
  const std::string& name(int flavor) const { return names_[flavor - 1]; }
  std::optional<int> flavor_of(std::string_view name) const;

  // Number of (alpha^i, beta^i) pairs when built by image_configuration(), else 0.
  int pair_count() const { return pairs_; }
  int alpha_flavor(int i) const { return i; }
  int beta_flavor(int i) const { return pairs_ + i; }

  // Inverse Gram matrix (row-major), or nullopt when the form is degenerate.
  std::optional<std::vector<Rational>> inverse_gram() const;

  bool operator==(const FlavorTable&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> gram_;
  int pairs_ = 0;
};

// Creation-only monomial alpha_{f1}(-k1)...alpha_{fr}(-kr) 1.  Factors are kept
// sorted by descending mode, then ascending flavor; the empty monomial is the
// vacuum.
class FockMonomial {
 public:
  struct Factor {
    int flavor;
    int mode;  // positive: the factor is alpha_flavor(-mode)
    bool operator==(const Factor&) const = default;
  };

  static constexpr int kMaxFlavor = 63;
  static constexpr int kMaxMode = 1023;

  FockMonomial() = default;
  // No range validation beyond the packing limits; see make_monomial().
  static FockMonomial from_factors(std::span<const Factor> factors);

  bool is_vacuum() const { return codes_.empty(); }
  std::size_t size() const { return codes_.size(); }
  Factor factor(std::size_t i) const { return decode(codes_[i]); }
  std::vector<Factor> factors() const;
  int weight() const { return weight_; }
  int multiplicity(Factor f) const;

  FockMonomial with(Factor f) const;
  FockMonomial without_index(std::size_t i) const;

  // Ordered by weight, then length, then factor codes.
  friend std::strong_ordering operator<=>(const FockMonomial& a, const FockMonomial& b);
  friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
    return a.codes_ == b.codes_;
  }

  std::size_t hash() const { return std::hash<std::u16string>{}(codes_); }

 private:
  static char16_t encode(Factor f) {
    return static_cast<char16_t>((f.mode << 6) | (kMaxFlavor - f.flavor));
  }
  static Factor decode(char16_t c) { return Factor{kMaxFlavor - (c & 63), c >> 6}; }

  std::u16string codes_;  // packed factors, sorted descending
  int weight_ = 0;
};

struct FockMonomialHash {
  std::size_t operator()(const FockMonomial& m) const { return m.hash(); }
};

// Validated constructor: flavors in 1..d, modes >= 1.  Throws ValidationError.
FockMonomial make_monomial(const FlavorTable& table, std::span<const std::pair<int, int>> pairs);

// Finite rational combination of Fock monomials, stored sorted by monomial with
// no zero coefficients.
class FockElement {
 public:
  using Term = std::pair<FockMonomial, Rational>;

  FockElement() = default;
  static FockElement vacuum() { return monomial(FockMonomial{}); }
  static FockElement monomial(FockMonomial m, Rational c = Rational(1));
  // Takes arbitrary (possibly repeated, possibly zero) terms and canonicalizes.
  static FockElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const FockMonomial& m) const;

  // Common weight of all monomials; nullopt when zero or inhomogeneous.
  std::optional<int> homogeneous_weight() const;
  int max_weight() const;
  FockElement component(int weight) const;

  FockElement operator-() const;
  FockElement& operator+=(const FockElement& other);
  FockElement& operator-=(const FockElement& other);
  FockElement& operator*=(const Rational& c);
  friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
  friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
  friend FockElement operator*(const Rational& c, FockElement a) { return a *= c; }
  friend FockElement operator*(FockElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const FockElement&, const FockElement&) = default;

 private:
  std::vector<Term> terms_;
};

// Hash-map accumulator for building large sums before canonicalizing.
class FockAccumulator {
 public:
  void add(const FockMonomial& m, const Rational& c);
  void add(const FockElement& v, const Rational& scale = Rational(1));
  bool empty_after_cancellation() const;
  FockElement finish() &&;

 private:
  std::unordered_map<FockMonomial, Rational, FockMonomialHash> terms_;
};

// Result of weight(): the common weight, or nullopt for an inhomogeneous element.
// Throws ValidationError for the zero element, which has no weight.
std::optional<int> weight(const FockElement& v);

// All basis monomials of exactly the given weight, in canonical order.
std::vector<FockMonomial> basis_monomials(const FlavorTable& table, int weight);
std::vector<FockMonomial> basis_monomials_up_to(const FlavorTable& table, int max_weight);

struct EngineOptions {
  // Largest weight any intermediate result may reach; exceeded -> BoundOverflow.
  std::optional<int> max_weight;
};

// omega = 1/2 sum_{ij} g^{ij} a_i(-1) a_j(-1) 1.  Throws ValidationError for a
// singular Gram matrix.
struct ConformalVector {
  FockElement element;
  int central_charge;

  static ConformalVector build(const FlavorTable& table);
};

// Vertex operator engine for M(1).  u_n v is computed by structural recursion:
// the vacuum and single-generator states are base cases, and a product state
// u = w_{-1} u' (w the highest-mode factor) is expanded by the iterate formula
// with m = -1.  Results on monomial pairs are memoized per engine instance, so
// one engine must not be shared between threads.
class ModeEngine {
 public:
  explicit ModeEngine(FlavorTable table, EngineOptions options = {});

  const FlavorTable& table() const { return table_; }
  const EngineOptions& options() const { return options_; }

  // alpha_flavor(m) acting on v.
  FockElement generator_mode_action(int flavor, int m, const FockElement& v) const;
  FockElement generator_mode_action(int flavor, int m, const FockMonomial& v) const;

  FockElement mode_action(const FockElement& u, int n, const FockElement& v) const;
  const FockElement& mode_action(const FockMonomial& u, int n, const FockMonomial& v) const;
  // Adds scale * u_n v into acc without materializing the sum.
  void accumulate_mode_action(FockAccumulator& acc, const FockElement& u, int n,
                              const FockElement& v, const Rational& scale = Rational(1)) const;

  FockElement d_operator(const FockElement& v) const;
  FockElement virasoro_mode(int m, const FockElement& v) const;
  const ConformalVector& conformal_vector() const;

  std::size_t cache_size() const { return cache_.size(); }
  void clear_cache() const { cache_.clear(); }

 private:
  struct Key {
    FockMonomial u;
    int n;
    FockMonomial v;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  FockElement compute(const FockMonomial& u, int n, const FockMonomial& v) const;
  FockElement generator_field_mode(int flavor, int k, int n, const FockMonomial& v) const;
  void check_weight(int w) const;

  FlavorTable table_;
  EngineOptions options_;
  mutable std::unordered_map<Key, FockElement, KeyHash> cache_;
  mutable std::unique_ptr<ConformalVector> conformal_;
};

// Independent second engine: expands Y(u, z) as the normally ordered product
// of derivative generator fields and applies the coefficient of z^{-n-1}.
FockElement normal_order_oracle(const FlavorTable& table, const FockMonomial& u, int n,
                                const FockElement& v, const EngineOptions& options = {});
FockElement normal_order_oracle(const FlavorTable& table, const FockElement& u, int n,
                                const FockElement& v, const EngineOptions& options = {});

}  // namespace mzva
