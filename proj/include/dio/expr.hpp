// Expression AST for equations over natural-number variables x1, x2, ...
//
// Nodes: integer constants (arbitrary precision), variables, sums, products,
// powers and negation. `normalize` flattens nested sums/products, folds
// constants and hoists signs so that structurally equal inputs print the
// same way; `to_text` emits a string the parser accepts back unchanged.
#pragma once

#include <string>
#include <vector>

#include "dio/bigint.hpp"

namespace dio {

struct Expr {
    enum class Kind { Constant, Variable, Sum, Product, Power, Negate };

    Kind kind = Kind::Constant;
    Int value;                    // Constant
    int var = 0;                  // Variable index, 1-based
    std::vector<Expr> children;   // Sum/Product terms, Power {base, exponent}, Negate {child}

    static Expr constant(Int v);
    static Expr variable(int index);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr power(Expr base, Expr exponent);
    static Expr negate(Expr child);

    bool is_constant() const { return kind == Kind::Constant; }
    bool is_constant(const Int& v) const { return kind == Kind::Constant && value == v; }

    bool operator==(const Expr& other) const;
};

// Canonical form: constants folded, sums/products flattened, negation pushed
// to the outermost position of each term. Idempotent.
Expr normalize(const Expr& e);

// Round-trippable text; parenthesizes exactly as the grammar requires.
std::string to_text(const Expr& e);

// Exact evaluation; point[i-1] is the value of x_i. Exponents must evaluate
// to non-negative integers small enough to expand (guarded by a hard cap).
Int evaluate(const Expr& e, const std::vector<Int>& point);

// Largest variable index mentioned (0 when none).
int max_variable(const Expr& e);

// Collects used variable indices into `used` (1-based; resized as needed).
void collect_variables(const Expr& e, std::vector<bool>& used);

// True iff every Power node has a constant exponent.
bool is_algebraic(const Expr& e);

// How the value moves as x_var grows, everything else held fixed, over the
// domain where every variable is >= 1. Conservative: Unknown when the shape
// does not certify a direction.
enum class Trend { Constant, Increasing, Decreasing, Unknown };

Trend trend_in(const Expr& e, int var);

// Provably >= 0 (resp. >= 1) for all assignments with every variable >= 1.
bool provably_nonnegative(const Expr& e);
bool provably_positive(const Expr& e);

// True iff x_var occurs somewhere inside a Power exponent (or as the base of
// a power with non-constant exponent). Used to prefer cheap bisection
// variables.
bool occurs_exponentially(const Expr& e, int var);

}  // namespace dio
