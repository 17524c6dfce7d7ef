// Second-order curve classification for two-variable equations
//
//   a11*x1^2 + a22*x2^2 + 2*a12*x1*x2 + 2*a13*x1 + 2*a23*x2 + a3 = 0.
//
// The symmetric 3x3 matrix of the form is stored in exact rationals (cross
// and linear coefficients are halved), so every sign test below is exact.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dio/polynomial.hpp"
#include "dio/ratmat.hpp"

namespace dio {

struct ConicForm {
    RatMat m;  // 3x3 symmetric: [[a11,a12,a13],[a12,a22,a23],[a13,a23,a3]]

    // From an expanded degree-<=2 polynomial in two variables. Throws
    // NotQuadraticError when the quadratic part vanishes or the degree
    // exceeds 2.
    static ConicForm from_polynomial(const Polynomial& p);
};

struct ConicInvariants {
    Rat D;      // a11*a22 - a12^2, the leading 2x2 determinant
    Rat delta;  // determinant of the full 3x3 matrix
};

enum class CurveClass {
    Ellipse,
    ImaginaryEllipse,
    Hyperbola,
    Parabola,
    DegenerateEllipse,     // a single real point
    DegenerateHyperbola,   // two intersecting lines
    ParallelLines,
    CoincidentLines,
    ImaginaryParallelLines,
    SingleLine,  // point-set reading of a coincident pair; not produced by
                 // classify_conic, which reports CoincidentLines
};

std::string to_string(CurveClass c);

struct ConicClassification {
    CurveClass curve;
    ConicInvariants invariants;
    // Center of a degenerate ellipse (solution of the 2x2 linear system for
    // the critical point; the cross term is honored).
    std::optional<std::pair<Rat, Rat>> center;
};

ConicInvariants conic_invariants(const ConicForm& c);

// Sign of D plus delta != 0 decide the non-degenerate types; degenerate ones
// (delta == 0) are told apart by the exact inertia of the 3x3 matrix.
ConicClassification classify_conic(const ConicForm& c);

}  // namespace dio
