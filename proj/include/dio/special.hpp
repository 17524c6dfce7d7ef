// Closed-form and box-bounded solvers for structured equations: power-chain
// systems x1^n1 = x2^n2 = ... = xk^nk, exponential counts, and named claim
// checks (Catalan uniqueness, the 2^a+3^b=5^c pair, a refuted closed-form
// count on a cone).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dio/count.hpp"
#include "dio/equation.hpp"

namespace dio {

struct PowerChainSystem {
    std::vector<unsigned> exponents;  // strictly increasing, size >= 2, each >= 1
    Int lcm;

    static PowerChainSystem make(std::vector<unsigned> exponents);

    // The chain as adjacent-pair equations x_i^{n_i} - x_{i+1}^{n_{i+1}} = 0,
    // for brute-force cross-checks.
    std::vector<Equation> equations() const;
};

// Exact count of chain solutions in {1..N}^k: the solutions are t^{m/n_i}
// per coordinate, and the largest coordinate is x_1, so the count is the
// number of t with t^{m/n_1} <= N, i.e. floor(N^{n_1/m}).
Int power_chain_count(const PowerChainSystem& sys, long long N);

// Solutions of x2 = a^x1 in {1..N}^2, i.e. floor(log_a N), by repeated
// multiplication. Requires a >= 2.
Int count_exponential(unsigned a, long long N);

// Solutions of x3 = x1^x2 with x1 >= 2 in {1..N}^3 (pairs (x1,x2) with
// x1^x2 <= N; x3 is determined).
Int count_power_tower(long long N);

// Exhaustive search of x1^x2 - 2^x3 = 1 over the given box. The exponent
// floor x2 >= 2 matters: with x2 = 1 every x1 = 2^x3 + 1 solves it.
struct CatalanBox {
    long long x1_lo = 2, x1_hi = 60;
    long long x2_lo = 2, x2_hi = 10;
    long long x3_lo = 1, x3_hi = 40;
};
std::vector<std::array<long long, 3>> catalan_check(const CatalanBox& box = {});

// All (x1,x2,x3) with 2^x1 + 3^x2 = 5^x3 and every exponent <= max_exp.
std::vector<std::array<long long, 3>> exp_sum_check(long long max_exp = 30);

// Cross-checks the documented closed form floor(sqrt((N-1)/2)) for the
// number of solutions of 2*x1^2 + x2^2 - x3^2 = 0 in {1..N}^3. The form
// counts only the ray (2t, t, 3t); the oracle finds solutions off that ray
// (such as (4,7,9)), so the check reports a mismatch warning.
struct ConeClaimCheck {
    long long N = 0;
    Int claimed;
    Int actual;
    bool matches = false;
    std::optional<std::array<long long, 3>> off_ray_example;
    std::string warning;  // empty iff matches
};
ConeClaimCheck cone_count_claim_check(long long N);

}  // namespace dio
