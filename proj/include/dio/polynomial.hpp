// Sparse multivariate polynomial with exact integer coefficients.
//
// Terms map an exponent vector of length k to a nonzero coefficient. The
// zero polynomial has no terms. All arithmetic is exact; this module never
// touches floating point.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dio/bigint.hpp"

namespace dio {

struct Expr;

class Polynomial {
  public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Int>;

    explicit Polynomial(int var_count = 0) : k_(var_count) {}

    static Polynomial constant(Int value, int var_count);
    static Polynomial variable(int index, int var_count);

    int var_count() const { return k_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    // Max total degree over stored terms; 0 for constants and the zero
    // polynomial.
    int total_degree() const;

    Int constant_term() const;

    // Adds `coeff * x^exps`, dropping the term if the sum cancels.
    void add_term(const Exponents& exps, const Int& coeff);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial pow(unsigned long exponent) const;
    bool operator==(const Polynomial& other) const = default;

    // Same terms, re-indexed into a space of new_k >= k variables.
    Polynomial extended_to(int new_k) const;

    Int evaluate(const std::vector<Int>& point) const;

    // Per-variable shape facts used by the counting engine.
    struct VarProfile {
        bool present = false;
        bool all_positive = false;  // every term containing the variable has coeff > 0
        bool all_negative = false;
        unsigned max_exponent = 0;
    };
    VarProfile profile(int var) const;

    // Largest |value| the polynomial can reach on [1..N]^k; used to certify
    // a machine-integer evaluation fast path.
    Int magnitude_bound(long long N) const;

    // Deterministic text (degree-descending, then lex), re-parseable by the
    // equation grammar.
    std::string to_string() const;

  private:
    int k_;
    TermMap terms_;
};

// Expands an expression into polynomial form; throws NotAlgebraicError on a
// non-constant exponent. `var_count` fixes k for the exponent vectors.
Polynomial expand_expr(const Expr& e, int var_count);

}  // namespace dio
