// Exact integer/rational arithmetic used throughout.
//
// Everything the library counts or classifies is computed over
// arbitrary-precision integers; rationals appear in densities and in the
// symmetric matrices of the second-order classifiers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dio {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned long exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// Largest r >= 0 with r^e <= n. Requires n >= 0 and e >= 1.
inline Int iroot(const Int& n, unsigned e) {
    if (e == 0) throw std::invalid_argument("iroot: zeroth root");
    if (n < 0) throw std::invalid_argument("iroot: negative radicand");
    if (n <= 1 || e == 1) return n;
    // Bisect on the bit length of the root.
    Int lo = 1;
    Int hi = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / e + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (ipow(mid, e) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline std::string to_string(const Int& v) { return v.str(); }

// Reduced "p/q" (or plain "p" when q == 1).
inline std::string to_string(const Rat& v) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace dio
