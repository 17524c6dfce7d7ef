// Solution-count bound predictions per curve/surface class: a finiteness
// category, a count-bound formula over N, and the asymptotic-density case
// (1 = eventually constant, 2 = grows like N^s with s < k).
#pragma once

#include <optional>
#include <string>

#include "dio/bigint.hpp"
#include "dio/conics.hpp"
#include "dio/quadrics.hpp"

namespace dio {

enum class BoundCategory { NoSolutions, FiniteConstant, AtMost };

// Count-bound formulas over the box size N. `ConstTimesN` and
// `NSquaredPlusConstTimesN` carry a finite constant that depends on the
// specific equation (the lattice count of a base curve), so they cannot be
// evaluated without data; everything else is closed-form in N, n, k.
enum class BoundForm {
    ConstTimesN,             // c*N, c finite
    NSquared,                // N^2
    NSquaredPlusConstTimesN, // N^2 + c*N
    TwoNSquared,             // 2*N^2
    TwoN,                    // 2*N
    JustN,                   // N
    DegreeTimesN,            // n*N
    DegreeTimesNPow,         // n*N^(k-1)
};

struct BoundPrediction {
    BoundCategory category = BoundCategory::AtMost;
    std::optional<BoundForm> form;  // set iff category == AtMost
    int degree = 0;                 // n
    int vars = 0;                   // k
    int density_case = 2;           // 1 iff NoSolutions/FiniteConstant

    // Closed-form value of the bound at N; nullopt when the formula carries
    // an equation-dependent constant.
    std::optional<Int> value(long long N) const;
    std::string formula_text() const;
};

BoundPrediction predict_bound(CurveClass c, int degree, int vars);
BoundPrediction predict_bound(SurfaceClass s, int degree, int vars);

// Any algebraic equation of degree n in k variables: at most n*N^(k-1)
// solutions in the box.
BoundPrediction predict_bound_generic(int degree, int vars);

}  // namespace dio
