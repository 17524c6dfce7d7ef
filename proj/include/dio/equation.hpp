#pragma once

#include <optional>
#include <string>

#include "dio/expr.hpp"
#include "dio/polynomial.hpp"

namespace dio {

// A parsed, normalized equation F(x1..xk) = 0.
struct Equation {
    // x_i = f(rest), recorded when the input was written that way.
    struct ExplicitForm {
        int variable = 0;
        Expr rhs;
    };

    std::string source;    // original text
    Expr f;                // normalized lhs - rhs
    int var_count = 0;     // k, taken from the raw text before folding
    bool algebraic = true;
    int degree = 0;        // total degree of the expansion (algebraic only)
    std::optional<Polynomial> poly;  // cached expansion (algebraic only)
    std::optional<ExplicitForm> explicit_form;

    std::string normalized_text() const { return to_text(f) + " = 0"; }
};

// Expanded polynomial of an algebraic equation; throws NotAlgebraicError
// otherwise. (For parsed equations this is the cached expansion.)
const Polynomial& expand_polynomial(const Equation& eq);

}  // namespace dio
