#include "mzva/mz_vertex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mzva/c2.hpp"
#include "mzva/linalg.hpp"
#include "mzva/parse.hpp"

namespace mzva {

std::string_view to_string(SpecKind k) {
  switch (k) {
    case SpecKind::C2PlusSpan: return "c2-plus-span";
    case SpecKind::C2PlusIdeal: return "c2-plus-ideal";
    case SpecKind::ImageSubspace: return "image-subspace";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SubspaceSpec

VariableRoster SubspaceSpec::roster() const {
  return kind == SpecKind::ImageSubspace ? VariableRoster::image(pairs) : VariableRoster::fock(variables);
}

void SubspaceSpec::validate() const {
  if (kind == SpecKind::ImageSubspace) {
    if (pairs < 1) throw ValidationError("image-subspace needs pairs >= 1");
    if (variables != 2 * pairs) throw ValidationError("image-subspace uses 2n variables");
  } else if (variables < 1) {
    throw ValidationError("variables must be >= 1");
  }
  if (degree_bound < 1) throw ValidationError("degree_bound must be positive");
  if (power_window < 1) throw ValidationError("power_window must be positive");
  if (kind == SpecKind::C2PlusIdeal && generators.empty())
    throw ValidationError("c2-plus-ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.is_zero()) throw ValidationError("generators must be nonzero");
    if (g.nvars() != variables) throw ValidationError("generator has the wrong number of variables");
  }
}

SubspaceSpec SubspaceSpec::parse(std::string_view text) {
  SubspaceSpec spec;
  std::vector<std::pair<int, std::string>> generator_lines;
  bool have_kind = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> ValidationError {
    return ValidationError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  auto positive = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(v, &used);
      if (used == v.size() && x >= 1) return x;
    } catch (const std::exception&) {
    }
    throw fail("expected a positive integer, got '" + v + "'");
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected 'key = value'");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "kind") {
      if (value == "c2-plus-span")
        spec.kind = SpecKind::C2PlusSpan;
      else if (value == "c2-plus-ideal")
        spec.kind = SpecKind::C2PlusIdeal;
      else if (value == "image-subspace")
        spec.kind = SpecKind::ImageSubspace;
      else
        throw fail("unknown kind '" + value + "'");
      have_kind = true;
    } else if (key == "variables") {
      spec.variables = positive(value);
    } else if (key == "pairs") {
      spec.pairs = positive(value);
    } else if (key == "generator") {
      generator_lines.emplace_back(lineno, value);
    } else if (key == "degree_bound") {
      spec.degree_bound = positive(value);
    } else if (key == "power_window") {
      spec.power_window = positive(value);
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  if (!have_kind) throw ValidationError("spec file does not declare a kind");
  if (spec.kind == SpecKind::ImageSubspace) spec.variables = 2 * spec.pairs;
  const VariableRoster roster = spec.roster();
  for (const auto& [ln, g] : generator_lines) {
    try {
      spec.generators.push_back(parse_poly(g, roster));
    } catch (const ParseError& e) {
      throw ValidationError("line " + std::to_string(ln) + ": generator " + e.what());
    }
  }
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Strings

FockElement string_product(const ModeEngine& engine, const FockElement& a, std::span<const int> string) {
  for (int n : string)
    if (n != 0 && n != -1) throw ValidationError("string modes must be 0 or -1");
  FockElement x = a;
  for (auto it = string.rbegin(); it != string.rend() && !x.is_zero(); ++it) x = engine.mode_action(a, *it, x);
  return x;
}

namespace {

std::string join_modes(std::span<const int> s) {
  if (s.empty()) return "none";
  std::string out;
  for (int n : s) out += (out.empty() ? "" : ",") + std::to_string(n);
  return out;
}

// Every string of {0,-1} of length t.
std::vector<std::vector<int>> all_strings(int t) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << t); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) s[i] = (mask >> i) & 1u ? 0 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial helpers

PolyElement compose(const PolyElement& p, const std::vector<PolyElement>& images, int nvars) {
  PolyElement out(nvars);
  for (const auto& [e, c] : p.terms()) {
    PolyElement term = PolyElement::constant(nvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

std::string format_point(const std::vector<Rational>& point, const VariableRoster& roster) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i)
    out += (i ? "," : "") + roster.name(static_cast<int>(i)) + "=" + point[i].to_string();
  return out;
}

// A point of Z^k in the box [0, degree]^k where q does not vanish; exists for
// every nonzero q of total degree <= degree.
std::vector<Rational> nonvanishing_point(const PolyElement& q) {
  const int k = q.nvars();
  const int deg = std::max(0, q.total_degree());
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<Rational> pt;
    for (int v : idx) pt.emplace_back(v);
    if (!q.evaluate(pt).is_zero()) return pt;
    int i = 0;
    while (i < k && idx[i] == deg) idx[i++] = 0;
    if (i == k) throw std::logic_error("nonzero polynomial vanishes on its degree box");
    ++idx[i];
  }
}

struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<DenseVector> directions;
};

// Common zeros of linear polynomials; nullopt when there are none.
std::optional<AffineSolution> linear_zeros(const std::vector<PolyElement>& gens, int nvars) {
  DenseMatrix a;
  DenseVector rhs;
  for (const auto& g : gens) {
    DenseVector row(static_cast<std::size_t>(nvars));
    for (const auto& [e, c] : g.terms()) {
      for (int i = 0; i < nvars; ++i)
        if (e[i] == 1) row[i] = c;
    }
    a.push_back(std::move(row));
    rhs.push_back(-g.constant_term());
  }
  Echelon<int> columns;
  for (int i = 0; i < nvars; ++i) {
    DenseVector col;
    for (const auto& row : a) col.push_back(row[i]);
    columns.insert(to_sparse(col));
  }
  auto x = columns.solve(to_sparse(rhs));
  if (!x) return std::nullopt;
  return AffineSolution{*x, nullspace(a, static_cast<std::size_t>(nvars))};
}

Fields spec_bounds(const SubspaceSpec& spec) {
  return {{"degree_bound", std::to_string(spec.degree_bound)},
          {"power_window", std::to_string(spec.power_window)}};
}

Verdict ideal_radical(const PolyElement& p, const SubspaceSpec& spec) {
  const Fields bounds = spec_bounds(spec);
  const int d = spec.variables;
  const VariableRoster roster = spec.roster();
  const auto& gens = spec.generators;

  if (p.is_zero()) return Verdict::proved("structural: 0 lies in every ideal", {{"m", "1"}}, bounds);
  for (const auto& g : gens)
    if (g.is_constant())
      return Verdict::proved("structural: a generator is a unit, so the ideal is the whole ring", {{"m", "1"}},
                             bounds);

  const bool linear = std::all_of(gens.begin(), gens.end(), [](const PolyElement& g) { return g.total_degree() <= 1; });
  if (linear) {
    auto zeros = linear_zeros(gens, d);
    if (!zeros)
      return Verdict::proved("structural: the linear generators have no common zero, so the ideal is the whole ring",
                             {{"m", "1"}}, bounds);
    // Restrict p to the affine subspace x = x0 + sum_j s_j n_j.
    const int k = static_cast<int>(zeros->directions.size());
    std::vector<PolyElement> images;
    for (int i = 0; i < d; ++i) {
      PolyElement xi = PolyElement::constant(k, zeros->particular[i]);
      for (int j = 0; j < k; ++j) xi += zeros->directions[j][i] * PolyElement::variable(k, j);
      images.push_back(std::move(xi));
    }
    const PolyElement restricted = compose(p, images, k);
    if (restricted.is_zero())
      return Verdict::proved("structural: an ideal of linear polynomials is prime and p vanishes on its zero set",
                             {{"m", "1"}}, bounds);
    const auto s = nonvanishing_point(restricted);
    std::vector<Rational> point(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) point[i] = images[i].evaluate(s);
    return Verdict::refuted("p is nonzero at a common zero of the generators, so no power lies in the ideal",
                            {{"m", "all"}, {"point", format_point(point, roster)}, {"value", p.evaluate(point).to_string()}},
                            bounds);
  }

  if (gens.size() == 1) {
    // Every irreducible factor of g occurs with multiplicity <= deg g, so
    // p is in the radical iff g divides p^m for some m <= deg g.  Divisibility
    // is exact once the quotient degree bound deg(p^m) - deg(g) is admitted.
    const PolyElement& g = gens.front();
    const int dg = g.total_degree();
    for (int m = 1; m <= dg; ++m) {
      const PolyElement pm = p.pow(m);
      const int need = pm.total_degree() - dg;
      if (need < 0) continue;
      if (need > spec.degree_bound)
        throw DegreeOverflow(m, "deciding p^" + std::to_string(m) + " in the ideal needs degree bound " +
                                    std::to_string(need));
      if (ideal_solve(pm, gens, need))
        return Verdict::proved(m == 1 ? "structural: p lies in the ideal, so every power does"
                                      : "exhaustive: the generator divides p^m",
                               {{"m", std::to_string(m)}}, bounds);
    }
    return Verdict::refuted("the generator divides no power p^m with m <= its degree, hence none at all",
                            {{"m", "all"}, {"checked_powers", "1.." + std::to_string(dg)}}, bounds);
  }

  if (ideal_solve(p, gens, spec.degree_bound))
    return Verdict::proved("structural: p lies in the ideal, so every power does", {{"m", "1"}}, bounds);
  if (d <= 5) {
    std::vector<int> idx(static_cast<std::size_t>(d), -2);
    while (true) {
      std::vector<Rational> pt;
      for (int v : idx) pt.emplace_back(v);
      const bool common = std::all_of(gens.begin(), gens.end(), [&](const PolyElement& g) { return g.evaluate(pt).is_zero(); });
      if (common && !p.evaluate(pt).is_zero())
        return Verdict::refuted("p is nonzero at a common zero of the generators, so no power lies in the ideal",
                                {{"m", "all"}, {"point", format_point(pt, roster)}, {"value", p.evaluate(pt).to_string()}},
                                bounds);
      int i = 0;
      while (i < d && idx[i] == 2) idx[i++] = -2;
      if (i == d) break;
      ++idx[i];
    }
  }
  for (int m = 2; m <= spec.power_window; ++m)
    if (ideal_solve(p.pow(m), gens, spec.degree_bound))
      return Verdict::proved("exhaustive: p^m lies in the ideal, so every higher power does", {{"m", std::to_string(m)}},
                             bounds);
  return Verdict::inconclusive("no power in the window lies in the ideal at the degree bound", bounds);
}

Verdict span_radical(const PolyElement& p, const SubspaceSpec& spec) {
  const Fields bounds = spec_bounds(spec);
  if (p.is_zero()) return Verdict::proved("structural: every power is 0", {{"m", "1"}}, bounds);
  Echelon<Exponents> span;
  int top = -1;
  for (const auto& g : spec.generators) {
    span.insert(g.to_sparse());
    top = std::max(top, g.total_degree());
  }
  if (p.is_constant()) {
    if (span.contains(PolyElement::constant(p.nvars(), Rational(1)).to_sparse()))
      return Verdict::proved("structural: every power is a multiple of 1, which lies in the span", {{"m", "1"}}, bounds);
    return Verdict::refuted("every power is a nonzero multiple of 1, which is outside the span", {{"m", "all"}}, bounds);
  }
  const int deg = p.total_degree();
  const int m = top / deg + 1;
  return Verdict::refuted("p^m has degree above every element of the span for all larger m",
                          {{"m", std::to_string(m)}, {"span_degree", std::to_string(top)}}, bounds);
}

}  // namespace

std::optional<std::vector<PolyElement>> ideal_solve(const PolyElement& p, const std::vector<PolyElement>& generators,
                                                    int bound) {
  const int n = p.nvars();
  const auto monos = monomials_up_to(n, bound);
  Echelon<Exponents> columns;
  for (const auto& g : generators)
    for (const auto& e : monos) columns.insert((g * PolyElement::monomial(e)).to_sparse());
  auto x = columns.solve(p.to_sparse());
  if (!x) return std::nullopt;
  std::vector<PolyElement> q(generators.size(), PolyElement(n));
  std::size_t col = 0;
  for (auto& qj : q)
    for (const auto& e : monos) qj.add_term(e, (*x)[col++]);
  return q;
}

std::optional<bool> spec_contains(const PolyElement& p, const SubspaceSpec& spec) {
  if (p.is_zero()) return true;
  if (spec.kind == SpecKind::C2PlusSpan) {
    Echelon<Exponents> span;
    for (const auto& g : spec.generators) span.insert(g.to_sparse());
    return span.contains(p.to_sparse());
  }
  if (spec.kind != SpecKind::C2PlusIdeal) throw ValidationError("membership needs a C2 spec");
  for (const auto& g : spec.generators)
    if (g.is_constant()) return true;
  const bool linear = std::all_of(spec.generators.begin(), spec.generators.end(),
                                  [](const PolyElement& g) { return g.total_degree() <= 1; });
  if (linear) {
    SubspaceSpec one = spec;
    one.power_window = 1;
    return ideal_radical(p, one).status == Status::Proved;
  }
  if (spec.generators.size() == 1) {
    const int need = p.total_degree() - spec.generators.front().total_degree();
    return need >= 0 && ideal_solve(p, spec.generators, need).has_value();
  }
  if (ideal_solve(p, spec.generators, spec.degree_bound)) return true;
  return std::nullopt;
}

Verdict poly_radical_member(const PolyElement& p, const SubspaceSpec& spec) {
  spec.validate();
  if (p.nvars() != spec.variables) throw ValidationError("polynomial has the wrong number of variables");
  switch (spec.kind) {
    case SpecKind::C2PlusIdeal: return ideal_radical(p, spec);
    case SpecKind::C2PlusSpan: return span_radical(p, spec);
    case SpecKind::ImageSubspace: break;
  }
  throw ValidationError("radical queries need a subspace containing C2 (c2-plus-span or c2-plus-ideal)");
}

Verdict vertex_radical_member(const ModeEngine& engine, const FockElement& a, const SubspaceSpec& spec) {
  if (spec.kind == SpecKind::ImageSubspace)
    throw ValidationError("radical queries need a subspace containing C2 (c2-plus-span or c2-plus-ideal)");
  if (engine.table().dim() != spec.variables)
    throw ValidationError("flavor count " + std::to_string(engine.table().dim()) + " does not match spec variables " +
                          std::to_string(spec.variables));
  Verdict v = poly_radical_member(c2_reduce(a, spec.variables), spec);
  if (v.status != Status::Proved) return v;

  // A proof at power m covers every string of length >= m - 1.
  int m = 1;
  if (auto f = v.field("m")) m = std::stoi(*f);
  int checked = 0;
  for (int t = std::max(0, m - 1); t <= 4; ++t)
    for (const auto& s : all_strings(t)) {
      const FockElement x = string_product(engine, a, s);
      const auto in = spec_contains(c2_reduce(x, spec.variables), spec);
      if (in && !*in)
        throw std::logic_error("string " + join_modes(s) + " of a proved radical member leaves the subspace");
      ++checked;
    }
  v.bounds.emplace_back("spot_checked_strings", std::to_string(checked));
  return v;
}

Verdict strong_radical_member(const ModeEngine& engine, const FockElement& a, const SubspaceSpec& spec,
                              int probe_weight) {
  if (probe_weight < 0) throw ValidationError("probe weight must be >= 0");
  Verdict r = vertex_radical_member(engine, a, spec);
  r.bounds.emplace_back("probe_weight", std::to_string(probe_weight));

  if (r.status == Status::Refuted) {
    // b = vac and s = -1 reproduce the string itself.
    int t = 0;
    if (auto m = r.field("m"); m && *m != "all") t = std::stoi(*m) - 1;
    Fields w{{"b", "vac"}, {"string", join_modes(std::vector<int>(static_cast<std::size_t>(t), -1))}, {"s", "-1"}};
    for (const auto& kv : r.witness) w.push_back(kv);
    return Verdict::refuted("the radical fails already: " + r.reason, w, r.bounds);
  }
  if (r.status != Status::Proved) return r;

  if (spec.kind == SpecKind::C2PlusIdeal) {
    r.reason = "structural: an ideal absorbs products, so the strong radical equals the radical; " + r.reason;
    return r;
  }
  const PolyElement p = c2_reduce(a, spec.variables);
  if (p.is_zero()) {
    r.reason = "structural: C2 is closed under 0- and -1-products on both sides";
    return r;
  }
  // p is a nonzero constant c and 1 lies in the span.  Then each string is
  // c^(t+1) vac modulo C2, and b_{-1} of it leaves M once reduce(b) does.
  Echelon<Exponents> span;
  for (const auto& g : spec.generators) span.insert(g.to_sparse());
  for (const auto& b : basis_monomials_up_to(engine.table(), probe_weight)) {
    const PolyElement rb = c2_reduce(FockElement::monomial(b), spec.variables);
    if (!span.contains(rb.to_sparse()))
      return Verdict::refuted("a is a unit modulo C2, so b_{-1} of every string is a multiple of b modulo C2",
                              {{"b", format_monomial(b, engine.table())}, {"string", "none"}, {"s", "-1"}}, r.bounds);
  }
  return Verdict::inconclusive("a is a unit modulo C2 and the span covers every probe state", r.bounds);
}

// ---------------------------------------------------------------------------
// Image subspace

FockElement f_map(const ModeEngine& engine, int i, const FockElement& a) {
  const FlavorTable& t = engine.table();
  const int n = t.pair_count();
  if (n == 0) throw ValidationError("f_i needs the image flavor configuration");
  if (i < 1 || i > n) throw ValidationError("pair index out of range");
  return engine.generator_mode_action(t.beta_flavor(i), 1, a) - engine.generator_mode_action(t.alpha_flavor(i), -1, a);
}

Rational image_obstruction(const PolyElement& p, int n) {
  if (p.nvars() != 2 * n) throw ValidationError("polynomial must use the 2n image variables");
  Rational total;
  for (const auto& [e, c] : p.terms()) {
    Rational w = c;
    for (int i = 0; i < n && !w.is_zero(); ++i)
      w = e[i] == e[n + i] ? w * factorial(e[i]) : Rational(0);
    total += w;
  }
  return total;
}

std::optional<std::vector<PolyElement>> image_solve(const PolyElement& p, int n, int bound) {
  if (p.nvars() != 2 * n) throw ValidationError("polynomial must use the 2n image variables");
  const auto monos = monomials_up_to(2 * n, bound);
  Echelon<Exponents> columns;
  for (int i = 0; i < n; ++i)
    for (const auto& e : monos) {
      const PolyElement m = PolyElement::monomial(e);
      columns.insert((m.partial(n + i) - PolyElement::variable(2 * n, i) * m).to_sparse());
    }
  auto x = columns.solve(p.to_sparse());
  if (!x) return std::nullopt;
  std::vector<PolyElement> q(static_cast<std::size_t>(n), PolyElement(2 * n));
  std::size_t col = 0;
  for (auto& qi : q)
    for (const auto& e : monos) qi.add_term(e, (*x)[col++]);
  return q;
}

Verdict image_member(const PolyElement& p, int n, int degree_bound) {
  if (n < 1) throw ValidationError("n must be >= 1");
  if (degree_bound < 0) throw ValidationError("degree bound must be >= 0");
  const VariableRoster roster = VariableRoster::image(n);
  const Fields bounds{{"n", std::to_string(n)}, {"degree_bound", std::to_string(degree_bound)}};
  auto witness = [&](const std::vector<PolyElement>& q) {
    Fields w;
    for (int i = 0; i < n; ++i) w.emplace_back("q" + std::to_string(i + 1), format_poly(q[i], roster));
    return w;
  };
  if (p.nvars() != 2 * n) throw ValidationError("polynomial must use the 2n image variables");
  if (p.is_zero())
    return Verdict::proved("exhaustive: explicit solution", witness(std::vector<PolyElement>(n, PolyElement(2 * n))),
                           bounds);
  const Rational obstruction = image_obstruction(p, n);
  if (!obstruction.is_zero())
    return Verdict::refuted("structural: the functional zeta^a x^b -> [a = b] a! kills the image but not p",
                            {{"obstruction", obstruction.to_string()}}, bounds);
  if (p.total_degree() > degree_bound + 1)
    throw DegreeOverflow(1, "p has degree " + std::to_string(p.total_degree()) + ", above degree bound + 1");
  if (auto q = image_solve(p, n, degree_bound)) return Verdict::proved("exhaustive: explicit solution", witness(*q), bounds);
  return Verdict::inconclusive("no solution with deg q_i <= degree bound", bounds);
}

}  // namespace mzva
