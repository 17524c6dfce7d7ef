// Second-order surface classification for equations in three (or more)
// variables. Ground truth is the exact inertia of the quadratic-part matrix
// and of the full bordered matrix; the classical determinant conditions
// (I, J, |D|, |A|) are evaluated alongside and any disagreement is surfaced
// as a warning instead of being silently resolved.
#pragma once

#include <string>
#include <vector>

#include "dio/polynomial.hpp"
#include "dio/ratmat.hpp"

namespace dio {

struct QuadricForm {
    int k = 3;  // number of variables
    RatMat m;   // (k+1) x (k+1) symmetric; leading k x k block is the quadratic part

    // From an expanded degree-<=2 polynomial in k >= 2 variables; cross and
    // linear coefficients are halved into the symmetric matrix. Throws
    // NotQuadraticError when the quadratic part vanishes or degree > 2.
    static QuadricForm from_polynomial(const Polynomial& p);

    RatMat quadratic_part() const;
};

struct QuadricInvariants {
    Rat I;       // trace of the quadratic part
    Rat J;       // sum of its 2x2 principal minors
    Rat detD;    // determinant of the quadratic part
    Rat detA;    // determinant of the bordered matrix
    Rat Aprime;  // sum of the k x k principal minors of the bordered matrix
};

enum class SurfaceClass {
    Ellipsoid,
    ImaginaryEllipsoid,
    OneSheetedHyperboloid,
    TwoSheetedHyperboloid,
    EllipticParaboloid,
    HyperbolicParaboloid,
    RealCone,
    ImaginaryCone,  // a single real point
    EllipticCylinder,
    ImaginaryEllipticCylinder,
    HyperbolicCylinder,
    ParabolicCylinder,
    PairOfIntersectingPlanes,
    PairOfImaginaryIntersectingPlanes,  // a single real line
    PairOfParallelPlanes,
    PairOfImaginaryParallelPlanes,
    PairOfCoincidentPlanes,
};

std::string to_string(SurfaceClass s);

struct QuadricClassification {
    SurfaceClass surface;
    QuadricInvariants invariants;
    Inertia quadratic_inertia;  // sign-normalized
    Inertia full_inertia;
    // Mismatches between the determinant-condition cross-check and the
    // inertia classification.
    std::vector<std::string> warnings;
    bool analogue = false;  // k != 3: named by the 3-variable analogue
};

QuadricInvariants quadric_invariants(const QuadricForm& q);

QuadricClassification classify_quadric(const QuadricForm& q);

}  // namespace dio
