// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_helpers.hpp"
#include "corpus.hpp"
#include "findim_corpus.hpp"
#include "mzva/axioms.hpp"
#include "mzva/c2.hpp"
#include "mzva/comm_va.hpp"
#include "mzva/mz_vertex.hpp"
#include "mzva/parse.hpp"

using namespace mzva;

namespace {

const std::string kData = MZVA_TEST_DATA;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

AxiomOptions full_grid() {
  AxiomOptions o;
  o.weight = 4;
  o.flavors = 2;
  return o;
}

bool run_suites(const std::vector<std::string>& ids, Outcome& out, double* seconds = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  long checks = 0;
  for (const auto& id : ids) {
    const auto r = run_suite(id, full_grid());
    checks += r.checks;
    if (!r.passed()) {
      std::string why = id + ": " + std::to_string(r.failures) + " failures";
      if (!r.samples.empty()) why += " (" + r.samples[0].identity + " at " + r.samples[0].inputs + ")";
      out.fail(why);
    }
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds) *seconds = s;
  if (out.ok) out.detail = std::to_string(checks) + " checks";
  return out.ok;
}

Outcome axiom_suite() {
  Outcome o;
  double s = 0;
  run_suites({"eq7", "eq8", "eq13", "skew", "eq15", "eq16", "eq17", "eq18"}, o, &s);
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << s << " s";
  if (o.ok && s > 60) o.fail("identities hold but took " + t.str());
  else if (o.ok) o.detail += ", " + t.str();
  return o;
}

Outcome dual_engine() {
  Outcome o;
  run_suites({"dual-engine"}, o);
  return o;
}

Outcome virasoro() {
  Outcome o;
  run_suites({"virasoro"}, o);
  return o;
}

Outcome c2_structure() {
  Outcome o;
  for (int d = 1; d <= 2; ++d) {
    ModeEngine e(FlavorTable::orthonormal(d));
    if (!cn_spanning_set(e, 2, 5).same_span(mode_two_monomial_span(e.table(), 5)))
      o.fail("cn_spanning_set(2, 5) differs from the mode >= 2 span for d=" + std::to_string(d));
  }
  if (!o.ok) return o;
  run_suites({"c2-span", "c2v", "cor-a01a"}, o);
  return o;
}

// Ideal (x - lambda): a string lies in M iff its reduction vanishes at lambda.
bool in_ideal(const FockElement& x, int lambda) {
  const Rational pt[] = {Rational(lambda)};
  return c2_reduce(x, 1).evaluate(pt).is_zero();
}

Outcome string_criterion() {
  Outcome o;
  const auto t = FlavorTable::orthonormal(1);
  ModeEngine e(t);
  int samples = 0, proved = 0, refuted = 0, degenerate = 0;
  auto P = [&](const char* text) { return parse_fock(text, t); };
  const FockElement vac = P("vac"), x = P("a1(-1) vac"), x2 = P("a1(-1) a1(-1) vac"), x3 = P("a1(-1) a1(-1) a1(-1) vac");
  for (int lambda : {0, 1, -2}) {
    const std::string gen = lambda == 0  ? "x1"
                            : lambda > 0 ? "x1 - " + std::to_string(lambda)
                                         : "x1 + " + std::to_string(-lambda);
    const auto spec = SubspaceSpec::parse("kind = c2-plus-ideal\nvariables = 1\ngenerator = " + gen + "\n");
    const Rational l(lambda);
    const std::vector<FockElement> elements = {
        x - l * vac,
        x2 - (l * l) * vac,
        x3 - (l * l * l) * vac,
        x2 - (Rational(2) * l) * x + (l * l) * vac,
        P("a1(-2) a1(-1) vac") + x - l * vac,
        P("a1(-2) vac"),
        P("a1(-3) vac + a1(-2) a1(-1) vac"),
        P("a1(-2) a1(-2) vac"),
        P("a1(-4) vac"),
        x - (l + Rational(1)) * vac,
        vac,
        P("a1(-3) vac + vac"),
        x2 + vac,
        P("a1(-1) a1(-1) a1(-1) a1(-1) vac"),
    };
    for (const auto& a : elements) {
      const std::string text = format_fock(a, t);
      const Verdict v = vertex_radical_member(e, a, spec);
      ++samples;
      const bool c2 = c2_reduce(a, 1).is_zero();
      degenerate += c2;
      if (v.status == Status::Proved) {
        ++proved;
        const int m = std::stoi(*v.field("m"));
        for (int len = std::max(0, m - 1); len <= 4; ++len)
          for (unsigned mask = 0; mask < (1u << len); ++mask) {
            std::vector<int> s(len);
            for (int i = 0; i < len; ++i) s[i] = (mask >> i) & 1u ? 0 : -1;
            if (!in_ideal(string_product(e, a, s), lambda)) o.fail("proved " + text + " but a string leaves M");
          }
      } else if (v.status == Status::Refuted) {
        ++refuted;
        for (int len = 0; len <= 4; ++len)
          if (in_ideal(string_product(e, a, std::vector<int>(len, -1)), lambda))
            o.fail("refuted " + text + " but a_{-1}^" + std::to_string(len) + " a lies in M");
      } else {
        o.fail("inconclusive on " + text);
      }
    }
  }
  if (samples < 25 || proved == 0 || refuted == 0 || degenerate == 0) o.fail("sample mix too thin");
  if (!o.ok) return o;
  run_suites({"thm-rel"}, o);
  o.detail = std::to_string(samples) + " elements (" + std::to_string(proved) + " proved, " +
             std::to_string(refuted) + " refuted, " + std::to_string(degenerate) + " in C2); " + o.detail;
  return o;
}

Outcome dw_example() {
  Outcome o;
  for (int k = -8; k <= 8; ++k) {
    if (k == 0) continue;
    if (laurent_radical_member(LaurentElement::monomial(k), 8, 8).status != Status::Proved)
      o.fail("t^" + std::to_string(k) + " not proved");
  }
  const auto v = laurent_radical_member(parse_laurent("t + t^-1"), 8, 8);
  if (v.status != Status::Refuted || v.field("m") != "2") o.fail("t + t^-1 not refuted at m = 2");
  if (o.ok) o.detail = "16 monomials proved, t + t^-1 refuted at m = 2";
  return o;
}

Outcome findim() {
  Outcome o;
  int subspaces = 0, queries = 0;
  for (const auto& a : local_algebra_corpus()) {
    const auto nil = nilradical(a);
    for (const auto& gens : generator_corpus(a)) {
      const auto u = Subspace::span(a, gens);
      ++subspaces;
      const Verdict v = mz_verdict(u);
      if (!u.contains_unit() && v.status != Status::Proved) o.fail("subspace without 1 not proved");
      if (u.contains_unit() && !u.is_whole() && v.status != Status::Refuted) o.fail("proper subspace with 1 not refuted");
      for (const auto& x : element_corpus(a)) {
        ++queries;
        const bool r = radical_member(x, u);
        if (r != radical_oracle(x, u)) o.fail("radical window disagrees with brute force");
        if (strong_radical_member(x, u) != strong_radical_oracle(x, u))
          o.fail("strong radical window disagrees with brute force");
        if (!u.contains_unit() && r != nil.contains(x)) o.fail("r(U) differs from the nilradical");
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(local_algebra_corpus().size()) + " algebras, " + std::to_string(subspaces) +
               " subspaces, " + std::to_string(queries) + " queries";
  return o;
}

Outcome image_bridge() {
  Outcome o;
  run_suites({"image-square"}, o);
  if (!o.ok) return o;
  const auto r = VariableRoster::image(1);
  const auto p = image_member(parse_poly("1 - zeta1 x1", r), 1, 2);
  if (p.status != Status::Proved) o.fail("1 - zeta1 x1 not proved at bound 2");
  const auto q = image_member(parse_poly("1", r), 1, 4);
  if (q.status != Status::Refuted || q.reason.rfind("structural", 0) != 0) o.fail("1 not refuted structurally");
  int solves = 0;
  for (int n = 1; n <= 2; ++n)
    for (const auto& e : monomials_up_to(2 * n, 2)) {
      const PolyElement poly = PolyElement::monomial(e) + PolyElement::constant(2 * n, 1);
      if (image_obstruction(poly, n).is_zero()) continue;
      for (int bound = 1; bound <= (n == 1 ? 6 : 3); ++bound, ++solves)
        if (image_solve(poly, n, bound)) o.fail("solver contradicts a structural refutation");
    }
  if (o.ok) o.detail += "; " + std::to_string(solves) + " solver runs agree with the obstruction";
  return o;
}

Outcome command_line() {
  Outcome o;
  // Round trip.
  const auto corpus = load_corpus(kData + "/roundtrip_corpus.txt");
  if (corpus.size() != 50) o.fail("corpus has " + std::to_string(corpus.size()) + " entries");
  for (const auto& [ctx, text] : corpus) {
    std::istringstream words(ctx);
    std::string kind, arg;
    words >> kind >> arg;
    if (kind == "fock") {
      FlavorTable t = FlavorTable::orthonormal(1);
      if (arg == "image") {
        int n;
        words >> n;
        t = FlavorTable::image_configuration(n);
      } else {
        t = FlavorTable::orthonormal(std::stoi(arg));
      }
      const auto e = parse_fock(text, t);
      if (parse_fock(format_fock(e, t), t) != e) o.fail("round trip: " + text);
    } else if (kind == "laurent") {
      const auto v = parse_laurent(text);
      if (parse_laurent(v.to_string()) != v) o.fail("round trip: " + text);
    } else {
      const auto r = kind == "poly" ? VariableRoster::fock(std::stoi(arg)) : VariableRoster::image(std::stoi(arg));
      const auto p = parse_poly(text, r);
      if (parse_poly(format_poly(p, r), r) != p) o.fail("round trip: " + text);
    }
  }
  // Exit codes.
  const std::vector<std::pair<std::vector<std::string>, int>> codes = {
      {{"product", "a1(-1) vac", "1", "a1(-1) vac"}, 0},
      {{"image", "1", "--n", "1", "--bound", "4"}, 1},
      {{"findim-mz", "--algebra", kData + "/split2.alg", "--subspace", kData + "/span_e1.sub"}, 2},
      {{"product", "a1(0) vac", "1", "vac"}, 3},
      {{"--max-weight", "3", "product", "a1(-1) a1(-1) vac", "-2", "a1(-1) vac"}, 4},
  };
  for (const auto& [args, code] : codes)
    if (run_cli(args).code != code) o.fail("exit code for " + args[0] + " is not " + std::to_string(code));
  // Full axiom run.
  const auto full = run_cli({"--format", "records", "axioms", "--weight", "4", "--flavors", "2"});
  if (full.code != 0) o.fail("axioms --weight 4 --flavors 2 exited " + std::to_string(full.code));
  // Byte stability.
  const std::vector<std::vector<std::string>> stable = {
      {"--format", "records", "axioms", "--weight", "2", "--flavors", "2"},
      {"--format", "records", "radical", "a1(-1) vac", "--spec", kData + "/ideal_two_vars.spec"},
      {"--format", "records", "image", "1 - zeta1 x1", "--n", "1", "--bound", "2"},
      {"--format", "records", "findim-mz", "--algebra", kData + "/cubic.alg", "--subspace", kData + "/span_x.sub"},
  };
  for (const auto& args : stable)
    if (run_cli(args).out != run_cli(args).out) o.fail("records differ between runs");
  if (o.ok) o.detail = "50 round trips, exit codes 0-4, full axiom run exits 0, records stable";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"axiom suite (weight <= 4, d <= 2, modes in [-3, 3])", axiom_suite},
      {"dual-engine equivalence", dual_engine},
      {"Virasoro relations, L(0) = weight, L(-1) = D", virasoro},
      {"C2 structure", c2_structure},
      {"string criterion", string_criterion},
      {"Laurent example", dw_example},
      {"finite-dimensional Mathieu-Zhao verdicts", findim},
      {"image bridge", image_bridge},
      {"command line", command_line},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << index << "] " << c.name << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
