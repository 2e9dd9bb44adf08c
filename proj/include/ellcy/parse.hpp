#pragma once
// Parsing of exact value spellings such as "5/32", "-27/5",
// "(17+56*sqrt(-2))/81" into field elements.

#include <string>

#include "ellcy/quad.hpp"

namespace ellcy {

/// Parses an exact rational or quadratic-field value. Accepted grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := integer | '(' expr ')' | 'sqrt' '(' expr ')' | '-' factor
/// sqrt arguments must be rational. Throws std::domain_error with a position
/// diagnostic on malformed input.
QuadElem parse_value(const std::string& text);

/// Parses a plain rational ("num", "num/den"); rejects sqrt spellings.
Rat parse_rational(const std::string& text);

}  // namespace ellcy
