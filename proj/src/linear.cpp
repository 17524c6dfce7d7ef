#include "dio/linear.hpp"

#include <algorithm>

#include "dio/errors.hpp"

namespace dio {

namespace {

// Counts solutions of sum(a_i * x_i) = b with x_i >= 1 (and x_i <= cap when
// cap > 0). Requires every a_i > 0.
Int count_positive(const std::vector<Int>& a, const Int& b, long long cap, std::size_t i,
                   const Int& min_rest) {
    if (i + 1 == a.size()) {
        if (b < a[i] || b % a[i] != 0) return 0;
        Int x = b / a[i];
        if (cap > 0 && x > cap) return 0;
        return 1;
    }
    Int count = 0;
    Int next_min_rest = min_rest - a[i + 1];
    for (Int v = 1; a[i] * v + min_rest <= b; ++v) {
        if (cap > 0 && v > cap) break;
        count += count_positive(a, b - a[i] * v, cap, i + 1, next_min_rest);
    }
    return count;
}

Int count_all_positive(const std::vector<Int>& a, const Int& b, long long cap) {
    if (b <= 0) return 0;
    Int min_rest = 0;
    for (std::size_t j = 1; j < a.size(); ++j) min_rest += a[j];
    return count_positive(a, b, cap, 0, min_rest);
}

}  // namespace

Int gcd_list(const std::vector<Int>& values) {
    Int g = 0;
    for (const auto& v : values) g = boost::multiprecision::gcd(g, v);
    if (g == 0) throw AllZeroError("gcd of all-zero list");
    return g;
}

ExtendedGcd extended_gcd(Int a, Int b) {
    bool neg_a = a < 0, neg_b = b < 0;
    if (neg_a) a = -a;
    if (neg_b) b = -b;
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * x;
        old_x = x;
        x = tmp;
        tmp = old_y - q * y;
        old_y = y;
        y = tmp;
    }
    return {old_r, neg_a ? -old_x : old_x, neg_b ? -old_y : old_y};
}

LinearSolution linear_solve(const LinearEquation& eq) {
    LinearSolution out;
    out.gcd = gcd_list(eq.coefficients);
    out.solvable = eq.b % out.gcd == 0;
    if (!out.solvable) {
        out.positive_class = PositiveClass::None;
        out.positive_count = 0;
        return out;
    }

    // Particular solution: fold the coefficients through extended Euclid,
    // carrying Bezout weights, then scale by b / gcd.
    std::vector<Int> weights{1};
    Int g = eq.coefficients[0];
    for (std::size_t i = 1; i < eq.coefficients.size(); ++i) {
        ExtendedGcd e = extended_gcd(g, eq.coefficients[i]);
        for (auto& w : weights) w *= e.x;
        weights.push_back(e.y);
        g = e.gcd;
    }
    Int scale = eq.b / out.gcd;
    // g can come out negative when the leading coefficients are; gcd_list is
    // the canonical nonnegative value.
    if (g < 0) scale = -scale;
    for (auto& w : weights) w *= scale;
    out.particular = std::move(weights);

    bool any_positive = false, any_negative = false, any_zero = false;
    for (const auto& a : eq.coefficients) {
        if (a > 0) any_positive = true;
        else if (a < 0) any_negative = true;
        else any_zero = true;
    }
    if (any_positive && any_negative) {
        // Mixed signs: from any integer solution, shifting x_i by |a_j|t and
        // x_j by a_i t walks into the positive orthant, so solutions never
        // run out.
        out.positive_class = PositiveClass::Infinite;
        return out;
    }

    // Same-sign coefficients; normalize to positive.
    std::vector<Int> a;
    for (const auto& c : eq.coefficients)
        if (c != 0) a.push_back(any_negative ? -c : c);
    Int b = any_negative ? -eq.b : eq.b;

    Int base = count_all_positive(a, b, 0);
    if (any_zero && base > 0) {
        // A zero-coefficient variable is unconstrained.
        out.positive_class = PositiveClass::Infinite;
        return out;
    }
    out.positive_class = PositiveClass::Finite;
    out.positive_count = base;
    return out;
}

Int linear_positive_count(const LinearEquation& eq, long long N) {
    for (const auto& a : eq.coefficients)
        if (a <= 0) throw Error("linear_positive_count requires positive coefficients");
    if (eq.b <= 0) throw Error("linear_positive_count requires positive b");
    return count_all_positive(eq.coefficients, eq.b, N);
}

}  // namespace dio
