#pragma once

#include <string>

#include "conflap/polynomial.hpp"

namespace conflap {

// Parses the textual polynomial grammar
//
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)?
//   var    := ('y'|'x') nat
//   coeff  := int ('/' nat)?
//
// Whitespace is insignificant; variables are 1-based in text. Example:
// "y1^2*y2 + 3/2*y1". All variables must use `letter` and have index within
// var_count. Throws ParseError with a byte position on malformed input.
Polynomial parse_polynomial(const std::string& text, int var_count, char letter);

}  // namespace conflap
