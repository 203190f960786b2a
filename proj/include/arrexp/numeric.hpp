#pragma once

// Exact number types used throughout the library: arbitrary-precision
// integers and rationals (always in lowest terms) from Boost.Multiprecision,
// plus the handful of small helpers the matrix builders need.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "arrexp/errors.hpp"

namespace arrexp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return den(r) == 1; }

// t^k for integer k of either sign; t == 0 requires k >= 0.
inline Rat rat_pow(const Rat& t, long long k) {
    if (k >= 0) {
        if (t == 0) return k == 0 ? Rat(1) : Rat(0);
        Rat r = 1;
        Rat base = t;
        unsigned long long n = static_cast<unsigned long long>(k);
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }
    if (t == 0) throw ZeroInput("zero base with negative exponent");
    return 1 / rat_pow(t, -k);
}

inline Int int_pow(const Int& t, long long k) {
    if (k < 0) throw BadRange("negative exponent for integer power");
    Int r = 1, base = t;
    unsigned long long n = static_cast<unsigned long long>(k);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// Falling factorial n(n-1)...(n-k+1); zero once k exceeds n.
inline Int falling_factorial(long long n, long long k) {
    if (k < 0 || n < 0) throw BadRange("falling factorial needs n, k >= 0");
    if (k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) r *= Int(n - i);
    return r;
}

inline Int factorial(long long n) { return falling_factorial(n, n); }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (is_integral(v)) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

}  // namespace arrexp
