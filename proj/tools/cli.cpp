#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "mzva/axioms.hpp"
#include "mzva/c2.hpp"
#include "mzva/comm_va.hpp"
#include "mzva/errors.hpp"
#include "mzva/findim.hpp"
#include "mzva/fock.hpp"
#include "mzva/mz_vertex.hpp"
#include "mzva/parse.hpp"

namespace mzva::cli {

std::string record_value(const std::string& value) {
  const bool bare = !value.empty() && std::none_of(value.begin(), value.end(), [](char c) {
    return c == ' ' || c == '"' || c == '=' || c == '\\' || c == '\t' || c == '\n';
  });
  if (bare) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

namespace {

struct Globals {
  std::string format = "text";
  int flavors = 0;
  int pairs = 0;
  std::optional<int> max_weight;
};

class Output {
 public:
  Output(std::ostream& out, bool records) : out_(out), records_(records) {}

  bool records() const { return records_; }
  std::ostream& stream() { return out_; }

  void record(const Fields& fields) {
    bool first = true;
    for (const auto& [k, v] : fields) {
      if (!first) out_ << ' ';
      first = false;
      out_ << k << '=' << record_value(v);
    }
    out_ << '\n';
  }

  void value(const std::string& command, const std::string& type, const std::string& text) {
    if (records_)
      record({{"kind", "value"}, {"command", command}, {"type", type}, {"value", text}});
    else
      out_ << text << '\n';
  }

  int verdict(const std::string& command, const Verdict& v) {
    if (records_) {
      Fields f{{"kind", "verdict"}, {"command", command}, {"status", std::string(to_string(v.status))},
               {"reason", v.reason}};
      for (const auto& [k, val] : v.witness) f.emplace_back("witness." + k, val);
      for (const auto& [k, val] : v.bounds) f.emplace_back("bound." + k, val);
      record(f);
    } else {
      out_ << to_string(v.status) << ": " << v.reason << '\n';
      for (const auto& [k, val] : v.witness) out_ << "  witness " << k << " = " << val << '\n';
      for (const auto& [k, val] : v.bounds) out_ << "  bound " << k << " = " << val << '\n';
    }
    switch (v.status) {
      case Status::Proved: return kSuccess;
      case Status::Refuted: return kRefuted;
      case Status::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
  }

 private:
  std::ostream& out_;
  bool records_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Largest index used by generator names of the given letter, e.g. a3 -> 3.
int max_generator_index(std::string_view text, char letter) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != letter) continue;
    if (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]))) continue;
    std::size_t j = i + 1;
    int idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && idx < 1000)
      idx = idx * 10 + (text[j++] - '0');
    if (j > i + 1) best = std::max(best, idx);
  }
  return best;
}

// --pairs selects the a/b image configuration, --flavors the orthonormal one;
// without either, the generators named in the inputs decide.
FlavorTable fock_table(const Globals& g, std::initializer_list<std::string_view> inputs) {
  if (g.pairs > 0) return FlavorTable::image_configuration(g.pairs);
  if (g.flavors > 0) return FlavorTable::orthonormal(g.flavors);
  int a = 0, b = 0;
  for (auto t : inputs) {
    a = std::max(a, max_generator_index(t, 'a'));
    b = std::max(b, max_generator_index(t, 'b'));
  }
  if (b > 0) return FlavorTable::image_configuration(std::max(a, b));
  return FlavorTable::orthonormal(std::max(a, 1));
}

ModeEngine make_engine(const Globals& g, FlavorTable table) {
  EngineOptions opts;
  opts.max_weight = g.max_weight;
  return ModeEngine(std::move(table), opts);
}

std::string duration(double seconds) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << seconds << " s";
  return ss.str();
}

int run_axioms(Output& out, const AxiomOptions& opts, const std::string& suite) {
  std::vector<SuiteResult> results;
  if (suite.empty())
    results = run_all_suites(opts);
  else
    results.push_back(run_suite(suite, opts));
  int passed = 0;
  double total = 0;
  for (const auto& r : results) {
    passed += r.passed();
    total += r.seconds;
    if (out.records()) {
      out.record({{"kind", "suite"},
                  {"id", r.id},
                  {"status", r.passed() ? "pass" : "fail"},
                  {"checks", std::to_string(r.checks)},
                  {"failures", std::to_string(r.failures)},
                  {"identity", r.identity}});
      for (const auto& f : r.samples)
        out.record({{"kind", "failure"},
                    {"suite", r.id},
                    {"identity", f.identity},
                    {"inputs", f.inputs},
                    {"lhs", f.lhs},
                    {"rhs", f.rhs}});
    } else {
      auto& s = out.stream();
      s << std::left << std::setw(13) << r.id << (r.passed() ? "pass  " : "FAIL  ") << std::right << std::setw(9)
        << r.checks << " checks  " << r.failures << " failures  " << duration(r.seconds) << "  " << r.identity
        << '\n';
      for (const auto& f : r.samples) {
        s << "    failed: " << f.identity << "\n      inputs: " << f.inputs << "\n      lhs: " << f.lhs
          << "\n      rhs: " << f.rhs << '\n';
      }
    }
  }
  const int n = static_cast<int>(results.size());
  if (out.records())
    out.record({{"kind", "summary"},
                {"suites", std::to_string(n)},
                {"passed", std::to_string(passed)},
                {"failed", std::to_string(n - passed)}});
  else
    out.stream() << passed << "/" << n << " suites passed in " << duration(total) << '\n';
  return passed == n ? kSuccess : kRefuted;
}

void report_error(Output& out, std::ostream& err, int code, const std::string& message) {
  err << "error: " << message << '\n';
  if (out.records()) out.record({{"kind", "error"}, {"exit", std::to_string(code)}, {"message", message}});
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Heisenberg vertex algebra M(1), its C2 quotient and Mathieu-Zhao subspaces",
               "mzva"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--flavors", g.flavors, "Number of orthonormal generators a1..ad")->check(CLI::Range(1, 63));
  app.add_option("--pairs", g.pairs, "Use the image configuration a1..an, b1..bn")->check(CLI::Range(1, 31));
  app.add_option("--max-weight", g.max_weight, "Largest intermediate weight before overflow")
      ->check(CLI::NonNegativeNumber);

  std::string s1, s2;
  int i1 = 0, i2 = 0;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  auto* product = sub("product", "u_n v");
  product->add_option("u", s1)->required();
  product->add_option("n", i1)->required();
  product->add_option("v", s2)->required();

  auto* apply = sub("apply", "Generator mode a_i(m) applied to v");
  apply->add_option("generator", s1)->required();
  apply->add_option("m", i1)->required();
  apply->add_option("v", s2)->required();

  auto* reduce = sub("reduce", "Image of v in M(1)/C2");
  reduce->add_option("v", s1)->required();

  auto* bracket = sub("bracket", "Poisson bracket {a, b} on M(1)/C2");
  bracket->add_option("a", s1)->required();
  bracket->add_option("b", s2)->required();

  auto* pprod = sub("pprod", "Commutative product a.b on M(1)/C2");
  pprod->add_option("a", s1)->required();
  pprod->add_option("b", s2)->required();

  auto* weight_cmd = sub("weight", "Conformal weight of a homogeneous state");
  weight_cmd->add_option("v", s1)->required();

  auto* dop = sub("dop", "D(v) = v_{-2} vac");
  dop->add_option("v", s1)->required();

  auto* lmode = sub("lmode", "Virasoro mode L(m) v");
  lmode->add_option("m", i1)->required();
  lmode->add_option("v", s1)->required();

  auto* string_cmd = sub("string", "a_{n1}(a_{n2}(... a)) for modes in {0,-1}");
  string_cmd->add_option("a", s1)->required();
  string_cmd->add_option("modes", s2, "Comma-separated, e.g. -1,0,-1")->required();

  auto* radical = sub("radical", "Membership of a in r_{0,-1}(M)");
  radical->add_option("a", s1)->required();
  radical->add_option("--spec", s2, "Subspace spec file")->required()->check(CLI::ExistingFile);

  auto* strong = sub("strong-radical", "Membership of a in sr_{0,-1}(M)");
  strong->add_option("a", s1)->required();
  strong->add_option("--spec", s2, "Subspace spec file")->required()->check(CLI::ExistingFile);
  int probe_weight = 2;
  strong->add_option("--probe-weight", probe_weight, "Weight bound for probe states b")->check(CLI::NonNegativeNumber);

  auto* image = sub("image", "Membership of p in sum_i (d/dx_i - zeta_i) Q[zeta, x]");
  image->add_option("p", s1)->required();
  image->add_option("--n", i2, "Number of variable pairs")->required()->check(CLI::PositiveNumber);
  int bound = 4;
  image->add_option("--bound", bound, "Degree bound for the q_i")->check(CLI::NonNegativeNumber);

  auto* findim = sub("findim-mz", "Mathieu-Zhao verdict for a subspace of a finite-dimensional algebra");
  findim->add_option("--algebra", s1, "Algebra file")->required()->check(CLI::ExistingFile);
  findim->add_option("--subspace", s2, "Subspace file")->required()->check(CLI::ExistingFile);

  auto* laurent = sub("laurent-radical", "Radical membership of v in Q[t, t^-1] relative to the constant-free part");
  laurent->add_option("v", s1)->required();
  int window = 8, powers = 8;
  laurent->add_option("--window", window, "Exponent window E")->check(CLI::PositiveNumber);
  laurent->add_option("--powers", powers, "Largest power tried")->check(CLI::PositiveNumber);

  auto* axioms = sub("axioms", "Run the identity suites");
  AxiomOptions ax;
  std::string suite;
  axioms->add_option("--weight", ax.weight, "Weight bound for u and v")->check(CLI::Range(1, 8));
  axioms->add_option("--flavors", ax.flavors, "Largest flavor count d")->check(CLI::Range(1, 4));
  axioms->add_option("--suite", suite, "Run one suite")->check(CLI::IsMember(suite_ids()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Output o(out, g.format == "records");
  try {
    if (*product) {
      ModeEngine e = make_engine(g, fock_table(g, {s1, s2}));
      const auto& t = e.table();
      o.value("product", "fock", format_fock(e.mode_action(parse_fock(s1, t), i1, parse_fock(s2, t)), t));
    } else if (*apply) {
      ModeEngine e = make_engine(g, fock_table(g, {s1, s2}));
      const auto& t = e.table();
      o.value("apply", "fock", format_fock(e.generator_mode_action(parse_generator(s1, t), i1, parse_fock(s2, t)), t));
    } else if (*reduce) {
      const FlavorTable t = fock_table(g, {s1});
      o.value("reduce", "poly", format_poly(c2_reduce(parse_fock(s1, t), t.dim()), VariableRoster::for_table(t)));
    } else if (*bracket || *pprod) {
      ModeEngine e = make_engine(g, fock_table(g, {s1, s2}));
      const auto& t = e.table();
      const auto a = parse_fock(s1, t), b = parse_fock(s2, t);
      const bool is_bracket = bracket->parsed();
      o.value(is_bracket ? "bracket" : "pprod", "poly",
              format_poly(is_bracket ? poisson_bracket(e, a, b) : poisson_product(e, a, b),
                          VariableRoster::for_table(t)));
    } else if (*weight_cmd) {
      const FlavorTable t = fock_table(g, {s1});
      const auto w = weight(parse_fock(s1, t));
      if (w)
        o.value("weight", "int", std::to_string(*w));
      else
        o.value("weight", "none", "inhomogeneous");
    } else if (*dop) {
      ModeEngine e = make_engine(g, fock_table(g, {s1}));
      o.value("dop", "fock", format_fock(e.d_operator(parse_fock(s1, e.table())), e.table()));
    } else if (*lmode) {
      ModeEngine e = make_engine(g, fock_table(g, {s1}));
      o.value("lmode", "fock", format_fock(e.virasoro_mode(i1, parse_fock(s1, e.table())), e.table()));
    } else if (*string_cmd) {
      ModeEngine e = make_engine(g, fock_table(g, {s1}));
      const auto modes = parse_int_list(s2);
      o.value("string", "fock", format_fock(string_product(e, parse_fock(s1, e.table()), modes), e.table()));
    } else if (*radical || *strong) {
      const SubspaceSpec spec = SubspaceSpec::parse(read_file(s2));
      if (spec.kind == SpecKind::ImageSubspace)
        throw ValidationError("radical queries need a subspace containing C2 (c2-plus-span or c2-plus-ideal)");
      Globals gs = g;
      gs.pairs = 0;
      gs.flavors = spec.variables;
      ModeEngine e = make_engine(gs, fock_table(gs, {}));
      const auto a = parse_fock(s1, e.table());
      if (*radical) return o.verdict("radical", vertex_radical_member(e, a, spec));
      return o.verdict("strong-radical", strong_radical_member(e, a, spec, probe_weight));
    } else if (*image) {
      const auto p = parse_poly(s1, VariableRoster::image(i2));
      return o.verdict("image", image_member(p, i2, bound));
    } else if (*findim) {
      const FinDimAlgebra alg = FinDimAlgebra::parse(read_file(s1));
      const Subspace u = Subspace::parse(alg, read_file(s2));
      return o.verdict("findim-mz", mz_verdict(u));
    } else if (*laurent) {
      return o.verdict("laurent-radical", laurent_radical_member(parse_laurent(s1), window, powers));
    } else if (*axioms) {
      return run_axioms(o, ax, suite);
    }
  } catch (const DegreeOverflow& e) {
    report_error(o, err, kBoundOverflow, std::string(e.what()) + " (at power " + std::to_string(e.power()) + ")");
    return kBoundOverflow;
  } catch (const BoundOverflow& e) {
    report_error(o, err, kBoundOverflow, e.what());
    return kBoundOverflow;
  } catch (const ParseError& e) {
    report_error(o, err, kUsage, std::string("parse error ") + e.what());
    return kUsage;
  } catch (const ValidationError& e) {
    report_error(o, err, kUsage, e.what());
    return kUsage;
  }
  return kSuccess;
}

}  // namespace mzva::cli
