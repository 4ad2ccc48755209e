#pragma once

#include <string>
#include <string_view>

#include "mzva/comm_va.hpp"
#include "mzva/fock.hpp"
#include "mzva/poly.hpp"

// Text grammar shared by the command line and the spec files:
//
//   expr   := [sign] term (('+' | '-') term)*
//   term   := rational | [rational '*'] factor+
//   factor := gen '(' '-' int ')' | 'vac' | var ['^' int]
//   rational := int ['/' posint]
//
// Whitespace is insignificant between tokens.  In a Fock context a term is a
// list of generator factors closed by `vac`, and a bare rational means that
// multiple of the vacuum; in a polynomial context factors are variables.

namespace mzva {

FockElement parse_fock(std::string_view text, const FlavorTable& table);
PolyElement parse_poly(std::string_view text, const VariableRoster& roster);
// Variable `t`; exponents may be negative ("t^-1").
LaurentElement parse_laurent(std::string_view text);
Rational parse_rational(std::string_view text);
// Generator name such as "a1" or "b2" to its flavor id.
int parse_generator(std::string_view name, const FlavorTable& table);
// Comma-separated integers: "0,-1,-1".  Empty text gives an empty list.
std::vector<int> parse_int_list(std::string_view text);

// Canonical printers: terms ascend by weight (Fock) or total degree (poly),
// coefficient 1 is omitted, other coefficients print as "c * ...".
std::string format_fock(const FockElement& v, const FlavorTable& table);
std::string format_monomial(const FockMonomial& m, const FlavorTable& table);
std::string format_poly(const PolyElement& p, const VariableRoster& roster);

}  // namespace mzva
