// Sign-pattern finiteness tests for polynomials over the naturals {1, 2, ...}
// and the divisor test for single-variable equations.
#pragma once

#include <vector>

#include "dio/polynomial.hpp"

namespace dio {

struct SignClassification {
    enum class Verdict { NoSolutions, FiniteWithBox, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    // Per-variable upper bounds (1-based order), set iff FiniteWithBox; every
    // solution has x_i <= bounds[i-1], and each bound is >= 1.
    std::vector<Int> bounds;
};

// Classifies p by coefficient signs:
//   - all non-constant coefficients >= 0 and constant term >= 0: no natural
//     solutions (the value at (1,..,1) is already positive and grows);
//   - all non-constant coefficients > 0 and constant term < 0: finitely many,
//     with a computed bounding box (the polynomial increases in every
//     variable, so each coordinate is capped where the axis section turns
//     positive);
//   - anything else: Inconclusive.
// Requires every variable of p to actually appear; a missing variable would
// leave a coordinate unbounded, so such input is Inconclusive as well.
// Throws ConstantPolynomialError when p has no variables at all.
SignClassification sign_classify(const Polynomial& p);

// Exact number of natural solutions of p = 0 when sign_classify says
// FiniteWithBox; scans the certified box. Throws NotMonotoneCaseError
// otherwise. The result does not depend on any N.
Int count_monotone(const Polynomial& p);

// Natural roots of a univariate polynomial with nonzero constant term; every
// root divides the constant term, so only divisors are tested. Throws
// ZeroConstantTermError when the constant term is zero (factor out x first).
Int count_univariate(const Polynomial& p);

}  // namespace dio
