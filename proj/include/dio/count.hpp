// Exact solution counting over boxes {1..N}^k.
//
// The engine enumerates variables depth-first. A variable whose coefficients
// all share one sign (or whose exponential occurrences certify a direction)
// makes the equation monotone in that variable, so its zero range is found by
// bisection instead of a sweep; interval bounds on partially assigned
// polynomials prune whole subtrees. Ambiguous shapes fall back to a full
// scan, so pruning is detected, never assumed.
#pragma once

#include <vector>

#include "dio/equation.hpp"

namespace dio {

struct BoxDomain {
    int k = 1;        // >= 1
    long long N = 1;  // >= 1

    Int volume() const { return ipow(Int(N), k); }
};

enum class CountMethod { FullScan, PrunedMonotone, ClosedForm };

std::string to_string(CountMethod m);

struct CountReport {
    Int pi;            // number of solution tuples in the box
    Rat density;       // pi / N^k
    Rat probability;   // equal to density by definition
    CountMethod method = CountMethod::FullScan;
    double elapsed_seconds = 0.0;
    bool partial = false;  // timed out; pi is a lower bound, not the count
    std::vector<std::vector<long long>> solutions;  // lexicographic, capped
    bool solutions_complete = false;
};

struct CountOptions {
    int workers = 1;
    double timeout_secs = 60.0;
    bool collect_solutions = true;
    std::size_t solution_limit = 64;
};

// Exact rational pi / N^k; throws CountExceedsBoxError when pi > N^k.
Rat density(const Int& pi, const BoxDomain& box);

// Exact number of tuples in {1..N}^k with F = 0. Requires eq.var_count <=
// box.k; variables beyond the equation's range freely. Deterministic for any
// worker count.
CountReport count_solutions(const Equation& eq, const BoxDomain& box,
                            const CountOptions& options = {});

// Tuples satisfying every equation simultaneously.
CountReport count_system(const std::vector<Equation>& eqs, const BoxDomain& box,
                         const CountOptions& options = {});

// For an equation written as x_i = f(rest): iterates the k-1 free variables
// and counts values of f landing in [1..N]; at most N^(k-1) by construction.
// Throws NotExplicitError when the equation was not written that way.
CountReport count_explicit(const Equation& eq, const BoxDomain& box,
                           const CountOptions& options = {});

// True iff pi <= n * N^(k-1) for the equation's total degree n. Requires an
// algebraic equation of degree >= 1.
bool verify_bound(const Equation& eq, const BoxDomain& box, const CountReport& report);

}  // namespace dio
