// Recursive-descent parser for the equation grammar:
//
//   equation := expr "=" expr
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := atom ("^" atom)?
//   atom     := integer | variable | "(" expr ")" | "-" atom
//   variable := "x" digits
//
// Whitespace is insignificant; implicit multiplication is a syntax error.
// Variables must be x1..xk with no gaps. Division anywhere and '-' inside an
// exponent are rejected as unsupported constructs.
#pragma once

#include <string>
#include <string_view>

#include "dio/equation.hpp"

namespace dio {

// Parses and normalizes `text` into an Equation (lhs - rhs = 0). Computes
// kind, variable count and, for algebraic input, the expanded polynomial and
// its degree. Throws ParseError on bad input.
Equation parse_equation(std::string_view text);

// Parses a single expression (no "="). Shared by tests and the linear front
// end.
Expr parse_expression(std::string_view text);

}  // namespace dio
