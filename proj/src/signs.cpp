#include "dio/signs.hpp"

#include "dio/errors.hpp"

namespace dio {

namespace {

// Value of p along the x_var axis with every other variable pinned at 1.
Int axis_value(const Polynomial& p, int var, const Int& v) {
    Int acc = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        unsigned e = exps[var - 1];
        acc += e == 0 ? coeff : coeff * ipow(v, e);
    }
    return acc;
}

}  // namespace

SignClassification sign_classify(const Polynomial& p) {
    if (p.is_constant()) throw ConstantPolynomialError("sign_classify: constant polynomial");

    const int k = p.var_count();
    Int constant = p.constant_term();
    bool any_negative = false, any_zero_profile = false, all_strictly_positive = true;
    for (const auto& [exps, coeff] : p.terms()) {
        bool is_const = true;
        for (unsigned e : exps) is_const = is_const && e == 0;
        if (is_const) continue;
        if (coeff < 0) any_negative = true;
        if (coeff <= 0) all_strictly_positive = false;
    }
    for (int v = 1; v <= k; ++v)
        if (!p.profile(v).present) any_zero_profile = true;

    SignClassification out;
    if (!any_negative && constant >= 0) {
        out.verdict = SignClassification::Verdict::NoSolutions;
        return out;
    }
    if (all_strictly_positive && constant < 0 && !any_zero_profile) {
        out.verdict = SignClassification::Verdict::FiniteWithBox;
        out.bounds.reserve(k);
        for (int v = 1; v <= k; ++v) {
            // p grows strictly along each axis; double until the axis
            // section is positive, then bisect for the first positive spot.
            Int hi = 1;
            while (axis_value(p, v, hi) <= 0) hi *= 2;
            Int lo = 1;
            while (lo < hi) {
                Int mid = (lo + hi) / 2;
                if (axis_value(p, v, mid) > 0)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            // First positive value minus one, clamped so the box stays
            // non-empty even when there are no solutions at all.
            Int bound = lo - 1;
            out.bounds.push_back(bound >= 1 ? bound : Int(1));
        }
        return out;
    }
    out.verdict = SignClassification::Verdict::Inconclusive;
    return out;
}

Int count_monotone(const Polynomial& p) {
    SignClassification sc = sign_classify(p);
    if (sc.verdict != SignClassification::Verdict::FiniteWithBox)
        throw NotMonotoneCaseError("count_monotone: polynomial is not in the monotone case");

    const int k = p.var_count();
    std::vector<Int> point(k, 1);
    Int count = 0;
    while (true) {
        if (p.evaluate(point) == 0) ++count;
        int i = k - 1;
        while (i >= 0) {
            ++point[i];
            if (point[i] <= sc.bounds[i]) break;
            point[i] = 1;
            --i;
        }
        if (i < 0) break;
    }
    return count;
}

namespace {

std::vector<Int> natural_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

Int count_univariate(const Polynomial& p) {
    if (p.var_count() != 1) throw Error("count_univariate: expected one variable");
    Int c0 = p.constant_term();
    if (c0 == 0)
        throw ZeroConstantTermError("count_univariate: zero constant term; factor out x first");
    Int roots = 0;
    for (const Int& d : natural_divisors(c0)) {
        if (p.evaluate({d}) == 0) ++roots;
    }
    return roots;
}

}  // namespace dio
