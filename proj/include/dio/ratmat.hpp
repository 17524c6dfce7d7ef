// Small dense rational matrices: exact determinants and the inertia
// (signature) of symmetric matrices via congruence reduction. Sizes here are
// (k+1) x (k+1) for k-variable quadrics, so O(n^3) rational arithmetic is
// plenty.
#pragma once

#include <vector>

#include "dio/bigint.hpp"

namespace dio {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_mat(int n);

// Signature of a symmetric matrix: counts of positive, negative and zero
// eigenvalues, computed exactly (Sylvester's law via symmetric elimination).
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int rank() const { return positive + negative; }
    bool operator==(const Inertia&) const = default;
};

Inertia matrix_inertia(RatMat m);  // by value: reduction destroys the copy

Rat determinant(RatMat m);

// Sum of the r x r principal minors (used for the classifier invariants).
Rat principal_minor_sum(const RatMat& m, int r);

}  // namespace dio
