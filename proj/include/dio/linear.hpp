// Linear Diophantine equations a1*x1 + ... + ak*xk = b: integer solvability
// via the gcd criterion, a particular solution from the extended Euclidean
// algorithm, and exact positive-solution counts over boxes.
#pragma once

#include <optional>
#include <vector>

#include "dio/bigint.hpp"

namespace dio {

struct LinearEquation {
    std::vector<Int> coefficients;  // a1..ak, not all zero
    Int b;
};

enum class PositiveClass { None, Finite, Infinite };

struct LinearSolution {
    bool solvable = false;
    Int gcd;                               // of the coefficients
    std::optional<std::vector<Int>> particular;  // integer solution, iff solvable
    PositiveClass positive_class = PositiveClass::None;
    std::optional<Int> positive_count;     // exact, iff Finite
};

// Nonnegative gcd of the list; throws AllZeroError when every value is zero.
Int gcd_list(const std::vector<Int>& values);

// gcd(a, b) plus Bezout coefficients x, y with a*x + b*y = gcd.
struct ExtendedGcd {
    Int gcd, x, y;
};
ExtendedGcd extended_gcd(Int a, Int b);

LinearSolution linear_solve(const LinearEquation& eq);

// Exact number of solutions with every x_i in [1, N]. Requires all
// coefficients and b positive.
Int linear_positive_count(const LinearEquation& eq, long long N);

}  // namespace dio
