#include "mzva/axioms.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

#include "mzva/c2.hpp"
#include "mzva/errors.hpp"
#include "mzva/mz_vertex.hpp"
#include "mzva/parse.hpp"

namespace mzva {

namespace {

constexpr std::size_t kSampleLimit = 5;

struct Context {
  AxiomOptions options;
  std::map<int, std::unique_ptr<ModeEngine>> engines;        // by flavor count
  std::map<int, std::unique_ptr<ModeEngine>> image_engines;  // by pair count

  const ModeEngine& engine(int d) {
    auto& e = engines[d];
    if (!e) e = std::make_unique<ModeEngine>(FlavorTable::orthonormal(d));
    return *e;
  }
  const ModeEngine& image_engine(int n) {
    auto& e = image_engines[n];
    if (!e) e = std::make_unique<ModeEngine>(FlavorTable::image_configuration(n));
    return *e;
  }
  std::vector<int> modes() const {
    std::vector<int> out;
    for (int m = options.mode_min; m <= options.mode_max; ++m) out.push_back(m);
    return out;
  }
};

std::vector<FockElement> states(const FlavorTable& t, int max_weight) {
  std::vector<FockElement> out;
  if (max_weight < 0) return out;
  for (const auto& m : basis_monomials_up_to(t, max_weight)) out.push_back(FockElement::monomial(m));
  return out;
}

class Recorder {
 public:
  Recorder(SuiteResult& r, const FlavorTable& t) : r_(r), t_(t) {}

  template <class Inputs>
  void equal(const FockElement& lhs, const FockElement& rhs, const char* identity, Inputs inputs) {
    ++r_.checks;
    if (lhs == rhs) return;
    fail(identity, inputs(), format_fock(lhs, t_), format_fock(rhs, t_));
  }

  // lhs == rhs modulo C_2, compared in M(1)/C_2.
  template <class Inputs>
  void congruent(const FockElement& lhs, const FockElement& rhs, const char* identity, Inputs inputs) {
    ++r_.checks;
    const int d = t_.dim();
    const PolyElement a = c2_reduce(lhs, d), b = c2_reduce(rhs, d);
    if (a == b) return;
    const VariableRoster roster = VariableRoster::for_table(t_);
    fail(identity, inputs(), format_poly(a, roster) + " mod C2", format_poly(b, roster) + " mod C2");
  }

  template <class Inputs>
  void holds(bool ok, const char* identity, Inputs inputs, const std::string& lhs, const std::string& rhs) {
    ++r_.checks;
    if (!ok) fail(identity, inputs(), lhs, rhs);
  }

  void pass() { ++r_.checks; }

  std::string name(const FockElement& v) const { return format_fock(v, t_); }

 private:
  void fail(const char* identity, std::string inputs, std::string lhs, std::string rhs) {
    ++r_.failures;
    if (r_.samples.size() < kSampleLimit)
      r_.samples.push_back({identity, "d=" + std::to_string(t_.dim()) + " " + std::move(inputs), std::move(lhs),
                            std::move(rhs)});
  }

  SuiteResult& r_;
  const FlavorTable& t_;
};

template <class Body>
void per_flavor(Context& ctx, SuiteResult& r, Body body) {
  for (int d = 1; d <= ctx.options.flavors; ++d) {
    const ModeEngine& e = ctx.engine(d);
    Recorder rec(r, e.table());
    body(e, rec);
  }
}

std::string triple(const Recorder& rec, const FockElement& u, int m, const FockElement& v, int n, const FockElement& w) {
  return "u=" + rec.name(u) + " m=" + std::to_string(m) + " v=" + rec.name(v) + " n=" + std::to_string(n) +
         " w=" + rec.name(w);
}

// The two large grids sum lhs - rhs into one accumulator over cached monomial
// products; the generic two-sided form is only evaluated to report a failure.

Rational sign_pow(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

bool commutator_holds(const ModeEngine& e, const FockMonomial& u, int m, const FockMonomial& v, int n,
                      const FockMonomial& w) {
  FockAccumulator acc;
  for (const auto& [x, c] : e.mode_action(v, n, w).terms()) acc.add(e.mode_action(u, m, x), c);
  for (const auto& [x, c] : e.mode_action(u, m, w).terms()) acc.add(e.mode_action(v, n, x), -c);
  for (int i = 0; i <= u.weight() + v.weight() - 1; ++i) {
    const Rational b = binomial(m, i);
    if (b.is_zero()) continue;
    for (const auto& [x, c] : e.mode_action(u, i, v).terms()) acc.add(e.mode_action(x, m + n - i, w), -b * c);
  }
  return acc.empty_after_cancellation();
}

// Memo of normal_order_oracle on monomial triples.
class OracleMemo {
 public:
  explicit OracleMemo(const FlavorTable& t) : t_(t) {}

  const FockElement& get(const FockMonomial& x, int n, const FockMonomial& w) {
    Key k{x, n, w};
    auto it = memo_.find(k);
    if (it == memo_.end())
      it = memo_.emplace(std::move(k), normal_order_oracle(t_, x, n, FockElement::monomial(w))).first;
    return it->second;
  }

 private:
  struct Key {
    FockMonomial x;
    int n;
    FockMonomial w;
    bool operator==(const Key&) const = default;
  };
  struct Hash {
    std::size_t operator()(const Key& k) const {
      return k.x.hash() * 1000003u ^ k.w.hash() * 31u ^ static_cast<std::size_t>(k.n + 64);
    }
  };
  const FlavorTable& t_;
  std::unordered_map<Key, FockElement, Hash> memo_;
};

bool iterate_holds(const ModeEngine& e, OracleMemo& oracle, const FockMonomial& u, int m, const FockMonomial& v,
                   int n, const FockMonomial& w) {
  FockAccumulator acc;
  for (const auto& [x, c] : e.mode_action(u, m, v).terms()) acc.add(oracle.get(x, n, w), c);
  const int top = std::max(v.weight() + w.weight() - 1 - n, u.weight() + w.weight() - 1);
  for (int i = 0; i <= top; ++i) {
    const Rational b = binomial(m, i) * sign_pow(i);
    if (b.is_zero()) continue;
    for (const auto& [x, c] : e.mode_action(v, n + i, w).terms()) acc.add(e.mode_action(u, m - i, x), -b * c);
    const Rational bm = b * sign_pow(m);
    for (const auto& [x, c] : e.mode_action(u, i, w).terms()) acc.add(e.mode_action(v, m + n - i, x), bm * c);
  }
  return acc.empty_after_cancellation();
}

void suite_eq7(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const FockOps ops{e};
    const auto uv = basis_monomials_up_to(e.table(), W), ws = basis_monomials_up_to(e.table(), W - 1);
    for (const auto& u : uv)
      for (const auto& v : uv)
        for (int m : ctx.modes())
          for (int n : ctx.modes())
            for (const auto& w : ws) {
              if (commutator_holds(e, u, m, v, n, w)) {
                rec.pass();
                continue;
              }
              const auto U = FockElement::monomial(u), V = FockElement::monomial(v), Wv = FockElement::monomial(w);
              auto [l, rr] = commutator_sides(ops, U, m, V, n, Wv);
              rec.equal(l, rr, "eq7 commutator formula", [&] { return triple(rec, U, m, V, n, Wv); });
            }
  });
}

void suite_eq8(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const FockOps ops{e};
    OracleMemo oracle(e.table());
    const auto uv = basis_monomials_up_to(e.table(), W), ws = basis_monomials_up_to(e.table(), W - 1);
    for (const auto& u : uv)
      for (const auto& v : uv)
        for (int m : ctx.modes())
          for (int n : ctx.modes())
            for (const auto& w : ws) {
              if (iterate_holds(e, oracle, u, m, v, n, w)) {
                rec.pass();
                continue;
              }
              const auto U = FockElement::monomial(u), V = FockElement::monomial(v), Wv = FockElement::monomial(w);
              const FockElement lhs = normal_order_oracle(e.table(), e.mode_action(U, m, V), n, Wv);
              rec.equal(lhs, iterate_rhs(ops, U, m, V, n, Wv), "eq8 iterate formula, left side by normal ordering",
                        [&] { return triple(rec, U, m, V, n, Wv); });
            }
  });
}

void suite_eq13(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const FockOps ops{e};
    const auto vs = states(e.table(), W), ws = states(e.table(), W - 1);
    for (const auto& v : vs)
      for (int n : ctx.modes())
        for (const auto& w : ws) {
          auto inputs = [&] { return "v=" + rec.name(v) + " n=" + std::to_string(n) + " w=" + rec.name(w); };
          auto [l1, r1] = d_commutator_sides(ops, v, n, w);
          rec.equal(l1, r1, "eq13 [D, v_n] = -n v_{n-1}", inputs);
          auto [l2, r2] = d_mode_sides(ops, v, n, w);
          rec.equal(l2, r2, "eq13 (D v)_n = -n v_{n-1}", inputs);
        }
  });
}

template <class SidesFn>
void pair_suite(Context& ctx, SuiteResult& r, const char* identity, SidesFn sides) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const FockOps ops{e};
    const auto uv = states(e.table(), W);
    for (const auto& u : uv)
      for (const auto& v : uv) {
        auto [l, rr] = sides(ops, u, v);
        rec.equal(l, rr, identity, [&] { return "u=" + rec.name(u) + " v=" + rec.name(v); });
      }
  });
}

void suite_skew(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const FockOps ops{e};
    const auto uv = states(e.table(), W);
    for (const auto& u : uv)
      for (const auto& v : uv)
        for (int n : ctx.modes()) {
          auto [l, rr] = skew_sides(ops, u, n, v);
          rec.equal(l, rr, "skew symmetry u_n v = -sum (-1)^{i+n}/i! D^i v_{i+n} u",
                    [&] { return "u=" + rec.name(u) + " n=" + std::to_string(n) + " v=" + rec.name(v); });
        }
  });
}

void suite_eq15(Context& ctx, SuiteResult& r) {
  pair_suite(ctx, r, "eq15 u_0 v = -v_0 u - sum_{i>=1} (-1)^i/i! D^i v_i u",
             [](const FockOps& ops, const FockElement& u, const FockElement& v) { return zero_mode_skew_sides(ops, u, v); });
}

void suite_eq17(Context& ctx, SuiteResult& r) {
  pair_suite(ctx, r, "eq17 u_{-1} v = v_{-1} u - sum_{i>=1} (-1)^{i+1}/i! D^i v_{i-1} u",
             [](const FockOps& ops, const FockElement& u, const FockElement& v) { return minus_one_skew_sides(ops, u, v); });
}

void suite_eq18(Context& ctx, SuiteResult& r) {
  pair_suite(ctx, r, "eq18 u_0 D(v) = D(u_0 v)",
             [](const FockOps& ops, const FockElement& u, const FockElement& v) { return zero_mode_d_sides(ops, u, v); });
  pair_suite(ctx, r, "eq18 u_{-1} D(v) = D(u_{-1} v) - u_{-2} v",
             [](const FockOps& ops, const FockElement& u, const FockElement& v) { return minus_one_mode_d_sides(ops, u, v); });
}

void suite_eq16(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const FockOps ops{e};
    // D restricted to each weight space, as a solver for D(w) = target.
    std::map<int, Echelon<FockMonomial>> d_image;
    for (const auto& u : states(e.table(), W)) {
      auto [l, rr] = self_zero_mode_sides(ops, u);
      rec.equal(l, rr, "eq16 u_0 u = 1/2 sum_{i>=1} (-1)^{i+1} D^i/i! u_i u", [&] { return "u=" + rec.name(u); });
      if (l.is_zero()) {
        rec.holds(true, "eq16 u_0 u in D(V)", [] { return std::string(); }, "", "");
        continue;
      }
      const int wt = *l.homogeneous_weight();
      auto [it, fresh] = d_image.try_emplace(wt);
      if (fresh)
        for (const auto& b : basis_monomials(e.table(), wt - 1)) {
          const FockElement db = e.d_operator(FockElement::monomial(b));
          it->second.insert({db.terms().begin(), db.terms().end()});
        }
      const bool solvable = it->second.solve({l.terms().begin(), l.terms().end()}).has_value();
      rec.holds(solvable, "eq16 u_0 u in D(V)", [&] { return "u=" + rec.name(u); }, rec.name(l), "no solution of D(w) = u_0 u");
    }
  });
}

void suite_grading(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const auto uv = states(e.table(), W);
    for (const auto& u : uv)
      for (const auto& v : uv)
        for (int m : ctx.modes()) {
          const FockElement x = e.mode_action(u, m, v);
          const int expected = *u.homogeneous_weight() + *v.homogeneous_weight() - m - 1;
          const bool ok = x.is_zero() || x.homogeneous_weight() == expected;
          rec.holds(ok, "grading wt(u_m v) = wt u + wt v - m - 1",
                    [&] { return "u=" + rec.name(u) + " m=" + std::to_string(m) + " v=" + rec.name(v); },
                    rec.name(x), "weight " + std::to_string(expected));
        }
  });
}

void suite_dual_engine(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const auto uv = states(e.table(), W);
    for (const auto& u : uv)
      for (const auto& v : uv)
        for (int n : ctx.modes())
          rec.equal(e.mode_action(u, n, v), normal_order_oracle(e.table(), u, n, v), "dual engine u_n v",
                    [&] { return "u=" + rec.name(u) + " n=" + std::to_string(n) + " v=" + rec.name(v); });
  });
}

void suite_virasoro(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight + 1;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const Rational c(e.conformal_vector().central_charge);
    for (const auto& v : states(e.table(), W)) {
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
          const FockElement lhs = e.virasoro_mode(m, e.virasoro_mode(n, v)) - e.virasoro_mode(n, e.virasoro_mode(m, v));
          FockElement rhs = Rational(m - n) * e.virasoro_mode(m + n, v);
          if (m + n == 0) rhs += (Rational(m * m * m - m, 12) * c) * v;
          rec.equal(lhs, rhs, "virasoro [L(m), L(n)]",
                    [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " v=" + rec.name(v); });
        }
      rec.equal(e.virasoro_mode(0, v), Rational(*v.homogeneous_weight()) * v, "virasoro L(0) = weight",
                [&] { return "v=" + rec.name(v); });
      rec.equal(e.virasoro_mode(-1, v), e.d_operator(v), "virasoro L(-1) = D", [&] { return "v=" + rec.name(v); });
    }
  });
}

void suite_remark_dv(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const CnSpan c2 = cn_spanning_set(e, 2, W + 1);
    const auto vs = states(e.table(), W);
    for (const auto& v : vs) {
      const FockElement dv = e.d_operator(v);
      rec.holds(c2.contains(dv) && in_c2(dv), "remark dv D(V) in C2", [&] { return "v=" + rec.name(v); },
                rec.name(dv), "element of C2");
    }
    for (const auto& u : vs)
      for (const auto& v : vs)
        for (int n = 2; n <= 3; ++n) {
          if (*u.homogeneous_weight() + *v.homogeneous_weight() + n - 1 > W + 1) continue;
          const FockElement x = e.mode_action(u, -n, v);
          rec.holds(c2.contains(x) && in_c2(x), "remark dv u_{-n} v in C2 for n >= 2",
                    [&] { return "u=" + rec.name(u) + " n=" + std::to_string(-n) + " v=" + rec.name(v); }, rec.name(x),
                    "element of C2");
        }
    const auto as = states(e.table(), std::min(W, 2));
    for (const auto& w : c2.basis())
      for (const auto& a : as)
        for (int s : {0, -1}) {
          const FockElement x = e.mode_action(a, s, w);
          rec.holds(in_c2(x), "remark dv a_s C2 in C2 for s in {0,-1}",
                    [&] { return "a=" + rec.name(a) + " s=" + std::to_string(s) + " w=" + rec.name(w); }, rec.name(x),
                    "element of C2");
        }
  });
}

void suite_c2_span(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight + 1;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const CnSpan c2 = cn_spanning_set(e, 2, W);
    const CnSpan mono = mode_two_monomial_span(e.table(), W);
    rec.holds(c2.same_span(mono), "C2 spanning set equals the mode >= 2 monomial span",
              [&] { return "weight<=" + std::to_string(W); }, "dim " + std::to_string(c2.dimension()),
              "dim " + std::to_string(mono.dimension()));
    CnSpan previous = c2;
    for (int p = 3; p <= 4; ++p) {
      const CnSpan cp = cn_spanning_set(e, p, W);
      for (const auto& v : cp.basis())
        rec.holds(previous.contains(v), "C_p contained in C_q for p >= q",
                  [&] { return "p=" + std::to_string(p) + " v=" + rec.name(v); }, rec.name(v),
                  "element of C_" + std::to_string(p - 1));
      previous = cp;
    }
    for (const auto& w : c2.basis())
      rec.holds(c2_reduce(w, e.table().dim()).is_zero(), "reduction vanishes on C2", [&] { return "w=" + rec.name(w); },
                rec.name(w), "0 mod C2");
  });
}

void suite_c2v(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const auto xs = states(e.table(), W);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        auto ab = [&] { return "a=" + rec.name(a) + " b=" + rec.name(b); };
        const FockElement a0b = e.mode_action(a, 0, b), am1b = e.mode_action(a, -1, b);
        rec.congruent(a0b, -e.mode_action(b, 0, a), "c2v a_0 b = -b_0 a mod C2", ab);
        rec.congruent(a0b, FockElement{}, "c2v Poisson bracket vanishes on M(1)/C2", ab);
        for (const auto& v : xs) {
          auto abv = [&] { return ab() + " v=" + rec.name(v); };
          const FockElement a0v = e.mode_action(a, 0, v), b0v = e.mode_action(b, 0, v);
          rec.equal(e.mode_action(a0b, 0, v), e.mode_action(a, 0, b0v) - e.mode_action(b, 0, a0v),
                    "c2v (a_0 b)_0 v = a_0 b_0 v - b_0 a_0 v", abv);
          rec.congruent(e.mode_action(am1b, -1, v), e.mode_action(a, -1, e.mode_action(b, -1, v)),
                        "c2v (a_{-1} b)_{-1} v = a_{-1} b_{-1} v mod C2", abv);
          rec.congruent(e.mode_action(am1b, 0, v), e.mode_action(a, -1, b0v) + e.mode_action(b, -1, a0v),
                        "c2v (a_{-1} b)_0 v = a_{-1} b_0 v + b_{-1} a_0 v mod C2", abv);
        }
      }
  });
}

// String products grow in weight quickly; both string suites skip inputs whose
// result would exceed this weight.
int string_weight_cap(const AxiomOptions& o) { return 3 * o.weight; }

// Strings of length <= 4 containing at least one 0 mode.
void suite_cor_a01a(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    for (const auto& a : states(e.table(), W)) {
      const int wa = *a.homogeneous_weight();
      if (wa == 0) continue;
      for (int t = 1; t <= 4; ++t)
        for (unsigned mask = 1; mask < (1u << t); ++mask) {  // at least one 0 mode
          std::vector<int> s(static_cast<std::size_t>(t));
          int zeros = 0;
          for (int i = 0; i < t; ++i) {
            s[i] = (mask >> i) & 1u ? 0 : -1;
            zeros += s[i] == 0;
          }
          if ((t + 1) * wa - zeros > string_weight_cap(ctx.options)) continue;
          std::vector<int> sorted(static_cast<std::size_t>(t - zeros), -1);
          sorted.resize(static_cast<std::size_t>(t), 0);
          const FockElement x = string_product(e, a, s), y = string_product(e, a, sorted);
          std::string label;
          for (int n : s) label += (label.empty() ? "" : ",") + std::to_string(n);
          auto inputs = [&] { return "a=" + rec.name(a) + " string=" + label; };
          rec.congruent(x, y, "cor a0-1a mixed string = sorted string mod C2", inputs);
          rec.holds(in_c2(x), "cor a0-1a string with a 0 mode lies in C2", inputs, rec.name(x), "element of C2");
        }
    }
  });
}

void suite_thm_rel(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  per_flavor(ctx, r, [&](const ModeEngine& e, Recorder& rec) {
    const auto xs = states(e.table(), W);
    for (const auto& b : xs)
      for (const auto& v : xs) {
        const int wv = *v.homogeneous_weight(), wb = *b.homogeneous_weight();
        const FockElement b0v = e.mode_action(b, 0, v);
        // power = v_{-1}^{t-1} v
        FockElement power = v;
        for (int t = 1; t <= 3; ++t) {
          if ((t + 1) * wv + wb - 1 > string_weight_cap(ctx.options)) break;
          const FockElement next = e.mode_action(v, -1, power);
          rec.congruent(e.mode_action(b, 0, next), Rational(t + 1) * e.mode_action(power, -1, b0v),
                        "thm rel b_0 (v_{-1}^t v) = (t+1) (v_{-1}^{t-1} v)_{-1} b_0 v mod C2", [&] {
                          return "b=" + rec.name(b) + " v=" + rec.name(v) + " t=" + std::to_string(t);
                        });
          power = next;
        }
        auto bw = [&] { return "b=" + rec.name(b) + " w=" + rec.name(v); };
        rec.congruent(b0v, -e.mode_action(v, 0, b), "lsr = rsr b_0 w + w_0 b in C2", bw);
        rec.congruent(e.mode_action(b, -1, v), e.mode_action(v, -1, b), "lsr = rsr b_{-1} w - w_{-1} b in C2", bw);
      }
  });
}

void suite_image_square(Context& ctx, SuiteResult& r) {
  const int W = ctx.options.weight;
  for (int n = 1; n <= std::min(ctx.options.flavors, 2); ++n) {
    const ModeEngine& e = ctx.image_engine(n);
    Recorder rec(r, e.table());
    const VariableRoster roster = VariableRoster::image(n);
    for (const auto& a : states(e.table(), W)) {
      const PolyElement ra = c2_reduce(a, 2 * n);
      for (int i = 1; i <= n; ++i) {
        const PolyElement lhs = c2_reduce(f_map(e, i, a), 2 * n);
        const PolyElement rhs = ra.partial(n + i - 1) - PolyElement::variable(2 * n, i - 1) * ra;
        rec.holds(lhs == rhs, "image square reduce(f_i a) = (d/dx_i - zeta_i) reduce(a)",
                  [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " a=" + rec.name(a); },
                  format_poly(lhs, roster), format_poly(rhs, roster));
      }
    }
  }
}

struct SuiteEntry {
  const char* id;
  const char* identity;
  void (*fn)(Context&, SuiteResult&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"eq7", "commutator formula [u_m, v_n] = sum_i binom(m,i) (u_i v)_{m+n-i}", suite_eq7},
      {"eq8", "iterate formula for (u_m v)_n, left side by normal ordering", suite_eq8},
      {"eq13", "D-relation [D, v_n] = (D v)_n = -n v_{n-1}", suite_eq13},
      {"skew", "skew symmetry Y(u,z)v = e^{zD} Y(v,-z)u", suite_skew},
      {"eq15", "u_0 v = -v_0 u - sum_{i>=1} (-1)^i/i! D^i v_i u", suite_eq15},
      {"eq16", "u_0 u = 1/2 sum_{i>=1} (-1)^{i+1} D^i/i! u_i u, lying in D(V)", suite_eq16},
      {"eq17", "u_{-1} v = v_{-1} u - sum_{i>=1} (-1)^{i+1}/i! D^i v_{i-1} u", suite_eq17},
      {"eq18", "u_0 D(v) = D(u_0 v) and u_{-1} D(v) = D(u_{-1} v) - u_{-2} v", suite_eq18},
      {"grading", "wt(u_m v) = wt u + wt v - m - 1", suite_grading},
      {"dual-engine", "recursive engine agrees with the normal-ordering engine", suite_dual_engine},
      {"virasoro", "Virasoro relations with c = d, L(0) = weight, L(-1) = D", suite_virasoro},
      {"remark-dv", "D(V) and u_{-n} v (n >= 2) lie in C2; C2 is closed under 0- and -1-products", suite_remark_dv},
      {"c2-span", "C2 equals the span of monomials with a mode >= 2 factor; C_p within C_q", suite_c2_span},
      {"c2v", "Poisson algebra structure on M(1)/C2", suite_c2v},
      {"cor-a01a", "strings with a 0 mode lie in C2 and sort modulo C2", suite_cor_a01a},
      {"thm-rel", "transfer congruence b_0 (v_{-1}^t v) = (t+1) (v_{-1}^{t-1} v)_{-1} b_0 v mod C2", suite_thm_rel},
      {"image-square", "reduce(f_i a) = (d/dx_i - zeta_i) reduce(a)", suite_image_square},
  };
  return entries;
}

const SuiteEntry& find(std::string_view id) {
  for (const auto& e : registry())
    if (id == e.id) return e;
  throw ValidationError("unknown suite '" + std::string(id) + "'");
}

void validate(const AxiomOptions& o) {
  if (o.weight < 1) throw ValidationError("weight must be >= 1");
  if (o.flavors < 1 || o.flavors > 8) throw ValidationError("flavors must be in 1..8");
  if (o.mode_min > o.mode_max) throw ValidationError("empty mode range");
}

SuiteResult run(const SuiteEntry& entry, Context& ctx) {
  SuiteResult r;
  r.id = entry.id;
  r.identity = entry.identity;
  const auto start = std::chrono::steady_clock::now();
  entry.fn(ctx, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view suite_identity(std::string_view id) { return find(id).identity; }

SuiteResult run_suite(std::string_view id, const AxiomOptions& options) {
  validate(options);
  const SuiteEntry& entry = find(id);
  Context ctx{options, {}, {}};
  return run(entry, ctx);
}

std::vector<SuiteResult> run_all_suites(const AxiomOptions& options) {
  validate(options);
  Context ctx{options, {}, {}};
  std::vector<SuiteResult> out;
  for (const auto& entry : registry()) out.push_back(run(entry, ctx));
  return out;
}

}  // namespace mzva
