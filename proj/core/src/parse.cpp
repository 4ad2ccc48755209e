#include "mzva/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "mzva/errors.hpp"

namespace mzva {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t position() {
    skip_ws();
    return pos_;
  }
  bool at_end() { return position() == text_.size(); }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_ident() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  std::string_view digits() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int small_int() {
    const std::size_t at = position();
    auto d = digits();
    int value = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (ec != std::errc() || ptr != d.data() + d.size()) throw ParseError(at, "integer out of range");
    return value;
  }

  int signed_int() {
    const bool negative = eat('-');
    const int v = small_int();
    return negative ? -v : v;
  }

  Rational rational() {
    const std::size_t at = position();
    std::string text(digits());
    if (eat('/')) {
      auto den = digits();
      text += "/";
      text += den;
    }
    auto r = Rational::parse(text);
    if (!r) throw ParseError(at, "malformed rational '" + text + "'");
    return *r;
  }

  std::string_view ident() {
    if (!at_ident()) fail("expected a name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(position(), message); }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// expr := [sign] term (('+' | '-') term)*; term(cursor, coefficient) adds the
// signed term into the accumulator.
template <class Elem, class TermFn>
Elem parse_sum(std::string_view text, TermFn term) {
  Cursor c(text);
  if (c.at_end()) c.fail("empty expression");
  Elem total{};
  bool first = true;
  while (!c.at_end()) {
    Rational sign(1);
    if (c.eat('-'))
      sign = Rational(-1);
    else if (!c.eat('+') && !first)
      c.fail("expected '+' or '-'");
    Rational coeff = sign;
    bool have_factors = true;
    if (c.at_digit()) {
      coeff *= c.rational();
      if (c.eat('*')) {
        if (!c.at_ident()) c.fail("expected a factor after '*'");
      } else {
        have_factors = c.at_ident();
      }
    } else if (!c.at_ident()) {
      c.fail("expected a term");
    }
    term(c, total, coeff, have_factors);
    first = false;
  }
  return total;
}

}  // namespace

FockElement parse_fock(std::string_view text, const FlavorTable& table) {
  return parse_sum<FockElement>(text, [&](Cursor& c, FockElement& total, const Rational& coeff,
                                          bool have_factors) {
    if (!have_factors) {
      total += coeff * FockElement::vacuum();
      return;
    }
    std::vector<std::pair<int, int>> pairs;
    while (true) {
      const std::size_t at = c.position();
      if (!c.at_ident()) c.fail("expected a generator or 'vac'");
      const std::string_view name = c.ident();
      if (name == "vac") break;
      auto flavor = table.flavor_of(name);
      if (!flavor) throw ParseError(at, "unknown generator '" + std::string(name) + "'");
      c.expect('(');
      const std::size_t mode_at = c.position();
      const int mode = c.signed_int();
      if (mode >= 0)
        throw ParseError(mode_at, "state literals take creation modes <= -1; use the `apply` command for " +
                                      std::string(name) + "(" + std::to_string(mode) + ")");
      c.expect(')');
      pairs.emplace_back(*flavor, -mode);
    }
    if (c.at_ident()) c.fail("'vac' must close the term");
    total += coeff * FockElement::monomial(make_monomial(table, pairs));
  });
}

PolyElement parse_poly(std::string_view text, const VariableRoster& roster) {
  const int n = roster.size();
  auto result = parse_sum<PolyElement>(text, [&](Cursor& c, PolyElement& total, const Rational& coeff,
                                                bool have_factors) {
    if (total.nvars() != n) total = PolyElement(n);
    Exponents e(static_cast<std::size_t>(n), 0);
    while (have_factors && c.at_ident()) {
      const std::size_t at = c.position();
      const std::string_view name = c.ident();
      auto p = roster.position_of(name);
      if (!p) throw ParseError(at, "unknown variable '" + std::string(name) + "'");
      int power = 1;
      if (c.eat('^')) power = c.small_int();
      e[*p] += power;
    }
    total.add_term(e, coeff);
  });
  if (result.nvars() != n) result = PolyElement(n);
  return result;
}

LaurentElement parse_laurent(std::string_view text) {
  return parse_sum<LaurentElement>(text, [&](Cursor& c, LaurentElement& total, const Rational& coeff,
                                             bool have_factors) {
    int exponent = 0;
    while (have_factors && c.at_ident()) {
      const std::size_t at = c.position();
      if (c.ident() != "t") throw ParseError(at, "the only variable is 't'");
      exponent += c.eat('^') ? c.signed_int() : 1;
    }
    total.add_term(exponent, coeff);
  });
}

Rational parse_rational(std::string_view text) {
  Cursor c(text);
  const bool negative = c.eat('-');
  Rational r = c.rational();
  if (!c.at_end()) c.fail("trailing characters after number");
  return negative ? -r : r;
}

int parse_generator(std::string_view name, const FlavorTable& table) {
  auto f = table.flavor_of(name);
  if (!f) throw ParseError(0, "unknown generator '" + std::string(name) + "'");
  return *f;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  Cursor c(text);
  if (c.at_end()) return out;
  do {
    out.push_back(c.signed_int());
  } while (c.eat(','));
  if (!c.at_end()) c.fail("expected ',' between integers");
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

template <class Range, class MonomialFn, class IsUnitFn>
std::string format_terms(const Range& terms, MonomialFn monomial, IsUnitFn is_unit) {
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (is_unit(m))
      out += mag.to_string();
    else if (mag.is_one())
      out += monomial(m);
    else
      out += mag.to_string() + " * " + monomial(m);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_monomial(const FockMonomial& m, const FlavorTable& table) {
  std::string out;
  for (const auto& f : m.factors()) out += table.name(f.flavor) + "(-" + std::to_string(f.mode) + ") ";
  return out + "vac";
}

std::string format_fock(const FockElement& v, const FlavorTable& table) {
  return format_terms(
      v.terms(), [&](const FockMonomial& m) { return format_monomial(m, table); },
      [](const FockMonomial&) { return false; });
}

std::string format_poly(const PolyElement& p, const VariableRoster& roster) {
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  auto degree = [](const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = degree(a.first), db = degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  auto monomial = [&](const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += " ";
      out += roster.name(static_cast<int>(i));
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  };
  return format_terms(terms, monomial, [&](const Exponents& e) { return degree(e) == 0; });
}

}  // namespace mzva
