#include "mzva/fock.hpp"

#include <algorithm>
#include <functional>

#include "mzva/errors.hpp"

namespace mzva {

// ---------------------------------------------------------------------------
// FlavorTable

FlavorTable FlavorTable::orthonormal(int d) {
  if (d < 1 || d > FockMonomial::kMaxFlavor)
    throw ValidationError("flavor count must be in 1.." + std::to_string(FockMonomial::kMaxFlavor));
  std::vector<std::string> names;
  std::vector<Rational> gram(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    names.push_back("a" + std::to_string(i + 1));
    gram[i * d + i] = Rational(1);
  }
  return with_gram(std::move(names), std::move(gram));
}

FlavorTable FlavorTable::image_configuration(int n) {
  if (n < 1 || 2 * n > FockMonomial::kMaxFlavor)
    throw ValidationError("pair count out of range");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
  std::vector<Rational> gram(static_cast<std::size_t>(4) * n * n);
  for (int i = 0; i < 2 * n; ++i) gram[i * 2 * n + i] = Rational(1);
  FlavorTable t = with_gram(std::move(names), std::move(gram));
  t.pairs_ = n;
  return t;
}

FlavorTable FlavorTable::with_gram(std::vector<std::string> names, std::vector<Rational> gram) {
  const std::size_t d = names.size();
  if (d == 0 || d > static_cast<std::size_t>(FockMonomial::kMaxFlavor))
    throw ValidationError("flavor count out of range");
  if (gram.size() != d * d) throw ValidationError("Gram matrix must be d x d");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i * d + j] != gram[j * d + i]) throw ValidationError("Gram matrix must be symmetric");
  FlavorTable t;
  t.names_ = std::move(names);
  t.gram_ = std::move(gram);
  return t;
}

std::optional<int> FlavorTable::flavor_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i + 1);
  return std::nullopt;
}

std::optional<std::vector<Rational>> FlavorTable::inverse_gram() const {
  const int d = dim();
  std::vector<Rational> a = gram_;
  std::vector<Rational> inv(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) inv[i * d + i] = Rational(1);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (!a[r * d + col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int c = 0; c < d; ++c) {
        std::swap(a[pivot * d + c], a[col * d + c]);
        std::swap(inv[pivot * d + c], inv[col * d + c]);
      }
    Rational p = a[col * d + col];
    for (int c = 0; c < d; ++c) {
      a[col * d + c] /= p;
      inv[col * d + c] /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || a[r * d + col].is_zero()) continue;
      Rational f = a[r * d + col];
      for (int c = 0; c < d; ++c) {
        a[r * d + c] -= f * a[col * d + c];
        inv[r * d + c] -= f * inv[col * d + c];
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// FockMonomial

FockMonomial FockMonomial::from_factors(std::span<const Factor> factors) {
  FockMonomial m;
  m.codes_.reserve(factors.size());
  for (const Factor& f : factors) {
    if (f.flavor < 1 || f.flavor > kMaxFlavor) throw ValidationError("flavor out of range");
    if (f.mode < 1) throw ValidationError("mode must be >= 1");
    if (f.mode > kMaxMode) throw BoundOverflow("mode exceeds " + std::to_string(kMaxMode));
    m.codes_.push_back(encode(f));
    m.weight_ += f.mode;
  }
  std::sort(m.codes_.begin(), m.codes_.end(), std::greater<>());
  return m;
}

std::vector<FockMonomial::Factor> FockMonomial::factors() const {
  std::vector<Factor> out;
  out.reserve(codes_.size());
  for (char16_t c : codes_) out.push_back(decode(c));
  return out;
}

int FockMonomial::multiplicity(Factor f) const {
  return static_cast<int>(std::count(codes_.begin(), codes_.end(), encode(f)));
}

FockMonomial FockMonomial::with(Factor f) const {
  if (f.mode > kMaxMode) throw BoundOverflow("mode exceeds " + std::to_string(kMaxMode));
  FockMonomial m = *this;
  char16_t c = encode(f);
  auto pos = std::lower_bound(m.codes_.begin(), m.codes_.end(), c, std::greater<>());
  m.codes_.insert(pos, c);
  m.weight_ += f.mode;
  return m;
}

FockMonomial FockMonomial::without_index(std::size_t i) const {
  FockMonomial m = *this;
  m.weight_ -= decode(m.codes_[i]).mode;
  m.codes_.erase(m.codes_.begin() + static_cast<std::ptrdiff_t>(i));
  return m;
}

std::strong_ordering operator<=>(const FockMonomial& a, const FockMonomial& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  if (auto c = a.codes_.size() <=> b.codes_.size(); c != 0) return c;
  return a.codes_.compare(b.codes_) <=> 0;
}

FockMonomial make_monomial(const FlavorTable& table, std::span<const std::pair<int, int>> pairs) {
  std::vector<FockMonomial::Factor> factors;
  for (auto [flavor, mode] : pairs) {
    if (flavor < 1 || flavor > table.dim())
      throw ValidationError("flavor " + std::to_string(flavor) + " out of range 1.." +
                            std::to_string(table.dim()));
    if (mode < 1) throw ValidationError("mode must be >= 1");
    factors.push_back({flavor, mode});
  }
  return FockMonomial::from_factors(factors);
}

// ---------------------------------------------------------------------------
// FockElement

FockElement FockElement::monomial(FockMonomial m, Rational c) {
  FockElement e;
  if (!c.is_zero()) e.terms_.emplace_back(std::move(m), std::move(c));
  return e;
}

FockElement FockElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  FockElement e;
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == t.first) {
      e.terms_.back().second += t.second;
      if (e.terms_.back().second.is_zero()) e.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      e.terms_.push_back(std::move(t));
    }
  }
  return e;
}

Rational FockElement::coefficient(const FockMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const FockMonomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

std::optional<int> FockElement::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  int w = terms_.front().first.weight();
  if (terms_.back().first.weight() != w) return std::nullopt;  // sorted by weight first
  return w;
}

int FockElement::max_weight() const { return terms_.empty() ? -1 : terms_.back().first.weight(); }

FockElement FockElement::component(int weight) const {
  FockElement e;
  for (const auto& t : terms_)
    if (t.first.weight() == weight) e.terms_.push_back(t);
  return e;
}

FockElement FockElement::operator-() const {
  FockElement e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

FockElement& FockElement::operator+=(const FockElement& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

FockElement& FockElement::operator-=(const FockElement& other) { return *this += -other; }

FockElement& FockElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

void FockAccumulator::add(const FockMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void FockAccumulator::add(const FockElement& v, const Rational& scale) {
  if (scale.is_zero()) return;
  if (scale.is_one()) {
    for (const auto& [m, c] : v.terms()) add(m, c);
  } else {
    for (const auto& [m, c] : v.terms()) add(m, c * scale);
  }
}

bool FockAccumulator::empty_after_cancellation() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
}

FockElement FockAccumulator::finish() && {
  std::vector<FockElement::Term> terms;
  terms.reserve(terms_.size());
  for (auto& [m, c] : terms_)
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  terms_.clear();
  return FockElement::from_terms(std::move(terms));
}

std::optional<int> weight(const FockElement& v) {
  if (v.is_zero()) throw ValidationError("the zero element has no weight");
  return v.homogeneous_weight();
}

// ---------------------------------------------------------------------------
// Basis enumeration

std::vector<FockMonomial> basis_monomials(const FlavorTable& table, int weight) {
  std::vector<FockMonomial> out;
  if (weight < 0) return out;
  // Candidate factors in canonical (descending) order: mode desc, flavor asc.
  std::vector<FockMonomial::Factor> candidates;
  for (int mode = weight; mode >= 1; --mode)
    for (int f = 1; f <= table.dim(); ++f) candidates.push_back({f, mode});
  std::vector<FockMonomial::Factor> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.push_back(FockMonomial::from_factors(current));
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (candidates[i].mode > remaining) continue;
      current.push_back(candidates[i]);
      rec(i, remaining - candidates[i].mode);
      current.pop_back();
    }
  };
  rec(0, weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FockMonomial> basis_monomials_up_to(const FlavorTable& table, int max_weight) {
  std::vector<FockMonomial> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto part = basis_monomials(table, w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conformal vector

ConformalVector ConformalVector::build(const FlavorTable& table) {
  auto inv = table.inverse_gram();
  if (!inv) throw ValidationError("Gram matrix is singular; no conformal vector");
  const int d = table.dim();
  FockAccumulator acc;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      const Rational& g = (*inv)[(i - 1) * d + (j - 1)];
      if (g.is_zero()) continue;
      FockMonomial::Factor fs[] = {{i, 1}, {j, 1}};
      acc.add(FockMonomial::from_factors(fs), g * Rational(1, 2));
    }
  return ConformalVector{std::move(acc).finish(), d};
}

// ---------------------------------------------------------------------------
// ModeEngine

namespace {
const FockElement& zero_element() {
  static const FockElement zero;
  return zero;
}
}  // namespace

ModeEngine::ModeEngine(FlavorTable table, EngineOptions options)
    : table_(std::move(table)), options_(options) {}

std::size_t ModeEngine::KeyHash::operator()(const Key& k) const {
  std::size_t h = k.u.hash();
  h ^= k.v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<int>{}(k.n) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void ModeEngine::check_weight(int w) const {
  if (options_.max_weight && w > *options_.max_weight)
    throw BoundOverflow("intermediate weight " + std::to_string(w) + " exceeds bound " +
                        std::to_string(*options_.max_weight));
}

FockElement ModeEngine::generator_mode_action(int flavor, int m, const FockMonomial& v) const {
  if (flavor < 1 || flavor > table_.dim()) throw ValidationError("flavor out of range");
  if (m == 0) return {};
  if (m < 0) {
    check_weight(v.weight() - m);
    return FockElement::monomial(v.with({flavor, -m}));
  }
  std::vector<FockElement::Term> terms;
  int last_flavor = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto f = v.factor(i);
    if (f.mode != m || f.flavor == last_flavor) continue;
    last_flavor = f.flavor;
    const Rational& g = table_.form(flavor, f.flavor);
    if (g.is_zero()) continue;
    Rational c = Rational(m) * g * Rational(v.multiplicity(f));
    terms.emplace_back(v.without_index(i), std::move(c));
  }
  return FockElement::from_terms(std::move(terms));
}

FockElement ModeEngine::generator_mode_action(int flavor, int m, const FockElement& v) const {
  FockAccumulator acc;
  for (const auto& [mono, c] : v.terms()) acc.add(generator_mode_action(flavor, m, mono), c);
  return std::move(acc).finish();
}

// Mode n of the state alpha(-k) 1 = D^{k-1}/(k-1)! alpha(-1) 1, using
// (Dv)_n = -n v_{n-1}: the mode is c * alpha(n-k+1) with
// c = prod_{j=0}^{k-2} (-(n-j)) / (k-1)!.
FockElement ModeEngine::generator_field_mode(int flavor, int k, int n, const FockMonomial& v) const {
  Rational c(1);
  for (int j = 0; j <= k - 2; ++j) c *= Rational(-(n - j));
  if (c.is_zero()) return {};
  c /= factorial(k - 1);
  FockElement r = generator_mode_action(flavor, n - k + 1, v);
  r *= c;
  return r;
}

const FockElement& ModeEngine::mode_action(const FockMonomial& u, int n, const FockMonomial& v) const {
  if (u.weight() + v.weight() - n - 1 < 0) return zero_element();
  Key key{u, n, v};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  FockElement r = compute(u, n, v);
  return cache_.emplace(std::move(key), std::move(r)).first->second;
}

FockElement ModeEngine::compute(const FockMonomial& u, int n, const FockMonomial& v) const {
  const int result_weight = u.weight() + v.weight() - n - 1;
  check_weight(result_weight);
  if (u.is_vacuum()) return n == -1 ? FockElement::monomial(v) : FockElement{};
  const auto head = u.factor(0);
  if (u.size() == 1) return generator_field_mode(head.flavor, head.mode, n, v);

  // u = w_{-1} rest with w = alpha_head(-k) 1:
  //   u_n v = sum_{i>=0} w_{-1-i} rest_{n+i} v + rest_{n-1-i} w_i v
  const int k = head.mode;
  const FockMonomial rest = u.without_index(0);
  FockAccumulator acc;
  for (int i = 0; n + i <= rest.weight() + v.weight() - 1; ++i) {
    const FockElement& inner = mode_action(rest, n + i, v);
    for (const auto& [mono, c] : inner.terms())
      acc.add(generator_field_mode(head.flavor, k, -1 - i, mono), c);
  }
  // w_i vanishes for 0 <= i <= k-1 (modes alpha(<=0) on M(1)).
  for (int i = k; i - k + 1 <= v.weight(); ++i) {
    FockElement annihilated = generator_field_mode(head.flavor, k, i, v);
    for (const auto& [mono, c] : annihilated.terms())
      acc.add(mode_action(rest, n - 1 - i, mono), c);
  }
  return std::move(acc).finish();
}

void ModeEngine::accumulate_mode_action(FockAccumulator& acc, const FockElement& u, int n,
                                        const FockElement& v, const Rational& scale) const {
  for (const auto& [um, uc] : u.terms())
    for (const auto& [vm, vc] : v.terms()) acc.add(mode_action(um, n, vm), uc * vc * scale);
}

FockElement ModeEngine::mode_action(const FockElement& u, int n, const FockElement& v) const {
  FockAccumulator acc;
  accumulate_mode_action(acc, u, n, v);
  return std::move(acc).finish();
}

FockElement ModeEngine::d_operator(const FockElement& v) const {
  return mode_action(v, -2, FockElement::vacuum());
}

const ConformalVector& ModeEngine::conformal_vector() const {
  if (!conformal_) conformal_ = std::make_unique<ConformalVector>(ConformalVector::build(table_));
  return *conformal_;
}

FockElement ModeEngine::virasoro_mode(int m, const FockElement& v) const {
  return mode_action(conformal_vector().element, m + 1, v);
}

// ---------------------------------------------------------------------------
// Normal-ordering oracle

namespace {

// alpha_flavor(p) on a single monomial, straight from the Heisenberg bracket
// [a(m), b(n)] = m (a,b) delta_{m+n,0}; kept separate from the engine.
void heisenberg_apply(const FlavorTable& table, int flavor, int p, const FockMonomial& v,
                      const Rational& coeff, std::vector<FockElement::Term>& out) {
  if (p < 0) {
    out.emplace_back(v.with({flavor, -p}), coeff);
    return;
  }
  if (p == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto f = v.factor(i);
    if (f.mode != p) continue;
    const Rational& g = table.form(flavor, f.flavor);
    if (g.is_zero()) continue;
    // One term per occurrence; occurrences of the same factor produce the same
    // monomial, which from_terms merges into the multiplicity count.
    out.emplace_back(v.without_index(i), coeff * Rational(p) * g);
  }
}

// Coefficient of alpha(p) z^{-p-k} in (1/(k-1)!) (d/dz)^{k-1} alpha(z).
Rational derivative_field_coefficient(int k, int p) { return binomial(-p - 1, k - 1); }

}  // namespace

FockElement normal_order_oracle(const FlavorTable& table, const FockMonomial& u, int n,
                                const FockElement& v, const EngineOptions& options) {
  const auto factors = u.factors();
  const int r = static_cast<int>(factors.size());
  std::vector<std::pair<int, int>> groups;  // (factor index, multiplicity)
  for (int j = 0; j < r; ++j) {
    if (j > 0 && factors[j].flavor == factors[j - 1].flavor && factors[j].mode == factors[j - 1].mode)
      ++groups.back().second;
    else
      groups.emplace_back(j, 1);
  }
  const int target = n + 1 - u.weight();  // required sum of chosen modes
  std::vector<FockElement::Term> out;

  for (const auto& [vm, vc] : v.terms()) {
    const int result_weight = u.weight() + vm.weight() - n - 1;
    if (result_weight < 0) continue;
    if (options.max_weight && result_weight > *options.max_weight)
      throw BoundOverflow("intermediate weight " + std::to_string(result_weight) +
                          " exceeds bound " + std::to_string(*options.max_weight));
    if (r == 0) {
      if (n == -1) out.emplace_back(vm, vc);
      continue;
    }
    // Each factor is either annihilating (mode p >= 1, applied first) or creating
    // (mode p <= -k).  Identical factors commute, so enumerate how many of each
    // group annihilate, weighted by the number of subsets.
    std::vector<int> count(groups.size(), 0);
    auto advance = [&] {
      for (std::size_t g = 0; g < groups.size(); ++g) {
        if (++count[g] <= groups[g].second) return true;
        count[g] = 0;
      }
      return false;
    };
    for (;;) {
      std::vector<int> ann, cre;
      int n_ann = 0;
      Rational scale(1);
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int c = 0; c < groups[g].second; ++c) (c < count[g] ? ann : cre).push_back(groups[g].first);
        n_ann += count[g];
        scale *= binomial(groups[g].second, count[g]);
      }
      // Each annihilator lowers the weight by at least 1.
      if (n_ann > vm.weight()) {
        if (!advance()) break;
        continue;
      }

      // States after applying annihilators, with the sum of their modes.
      struct Partial {
        std::vector<FockElement::Term> state;
        int mode_sum;
      };
      std::vector<Partial> partials{{{{vm, vc * scale}}, 0}};
      for (int j : ann) {
        std::vector<Partial> next;
        for (const auto& part : partials) {
          int avail = 0;
          for (const auto& t : part.state) avail = std::max(avail, t.first.weight());
          for (int p = 1; p <= avail; ++p) {
            Rational coeff = derivative_field_coefficient(factors[j].mode, p);
            std::vector<FockElement::Term> st;
            for (const auto& [m, c] : part.state)
              heisenberg_apply(table, factors[j].flavor, p, m, c * coeff, st);
            FockElement merged = FockElement::from_terms(std::move(st));
            if (merged.is_zero()) continue;
            next.push_back({merged.terms(), part.mode_sum + p});
          }
        }
        partials = std::move(next);
      }

      for (const auto& part : partials) {
        // Creation modes p_j = -k_j - q_j with q_j >= 0 and sum p_j fixed.
        int creation_sum = target - part.mode_sum;
        int q_total = -creation_sum;
        for (int j : cre) q_total -= factors[j].mode;
        if (q_total < 0) continue;
        if (cre.empty()) {
          if (q_total == 0) out.insert(out.end(), part.state.begin(), part.state.end());
          continue;
        }
        // Apply creators one at a time, sharing the state across prefixes.
        auto rec = [&](auto&& self, std::size_t idx, int remaining,
                       const std::vector<FockElement::Term>& st) -> void {
          const auto& f = factors[cre[idx]];
          const bool last = idx + 1 == cre.size();
          for (int x = last ? remaining : 0; x <= remaining; ++x) {
            int p = -f.mode - x;
            Rational coeff = derivative_field_coefficient(f.mode, p);
            std::vector<FockElement::Term> nx;
            for (const auto& [m, cf] : st) heisenberg_apply(table, f.flavor, p, m, cf * coeff, nx);
            if (last)
              out.insert(out.end(), std::make_move_iterator(nx.begin()), std::make_move_iterator(nx.end()));
            else
              self(self, idx + 1, remaining - x, nx);
          }
        };
        rec(rec, 0, q_total, part.state);
      }
      if (!advance()) break;
    }
  }
  return FockElement::from_terms(std::move(out));
}

FockElement normal_order_oracle(const FlavorTable& table, const FockElement& u, int n,
                                const FockElement& v, const EngineOptions& options) {
  FockElement result;
  for (const auto& [um, uc] : u.terms()) result += uc * normal_order_oracle(table, um, n, v, options);
  return result;
}

}  // namespace mzva
