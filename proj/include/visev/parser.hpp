#pragma once

#include <string>

#include "visev/polynomial.hpp"

namespace visev {

// Expression grammar: identifiers [a-zA-Z][a-zA-Z0-9_]*, integer and p/q
// rational literals, operators + - * ^, parentheses, unary minus.
// Unknown variables and syntax errors raise ParseError with line/column.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace visev
