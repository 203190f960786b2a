#pragma once

// p-adic valuations of exact integers, and the comparison of a descending
// tuple's Wronskian valuation against the valuation floor attained by the
// gap-free tuple of the same length.

#include <optional>

#include "arrexp/errors.hpp"
#include "arrexp/intfactor.hpp"
#include "arrexp/numeric.hpp"
#include "arrexp/tuples.hpp"
#include "arrexp/wronskian.hpp"

namespace arrexp {

struct Valuation {
    Int p;
    std::optional<Int> value;  // empty encodes +infinity, the valuation of 0

    bool is_infinite() const { return !value.has_value(); }
};

// Exponent of p in N; N must be nonzero and p prime.
inline Int vp(Int N, const Int& p) {
    if (N == 0) throw ZeroInput("valuation of zero is infinite");
    if (!is_prime(p)) throw NotPrime(p.str());
    if (N < 0) N = -N;
    Int v = 0;
    while (N % p == 0) {
        N /= p;
        ++v;
    }
    return v;
}

// Total variant: the valuation of 0 is the infinity marker.
inline Valuation valuation(const Int& N, const Int& p) {
    if (!is_prime(p)) throw NotPrime(p.str());
    if (N == 0) return {p, std::nullopt};
    return {p, vp(N, p)};
}

// The Wronskian of the descending tuple (n, n-1, ..., 0) has the smallest
// p-adic valuation among same-length descending tuples; this checks one
// instance of that floor.
inline bool check_min_valuation(const NNTuple& a, const Int& p) {
    const Int va = vp(wronskian_closed(a), p);
    const Int v0 =
        vp(wronskian_closed(range_tuple(static_cast<long long>(a.size()) - 1, 0)), p);
    return va >= v0;
}

}  // namespace arrexp
