#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqf/bipoly.hpp"
#include "sqf/poly.hpp"

namespace sqf {

// Grammar shared by every parser below (whitespace ignored):
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer | variable | '(' expr ')'
//
// Integers are reduced mod p. Which variables are legal depends on the
// target: `u` (the extension generator), `t`, `x`.

/// A polynomial over F_p in `u`; low-to-high coefficients.
std::vector<std::uint32_t> parse_modulus(std::string_view text, std::uint32_t p);
FieldElement parse_field_element(std::string_view text, const FieldPtr& field);
Poly parse_poly(std::string_view text, const FieldPtr& field);
BiPoly parse_bipoly(std::string_view text, const FieldPtr& field);

/// Canonical text: descending powers, zero terms and unit coefficients
/// omitted, multi-term coefficients parenthesised. Parses back to the input.
std::string format(const FieldElement& a);
std::string format(const Poly& a);
std::string format(const BiPoly& f);

}  // namespace sqf
