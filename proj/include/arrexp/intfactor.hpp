#pragma once

// Integer primality and factorization on exact integers: trial division for
// the small part, Miller-Rabin with a fixed deterministic base set for the
// sizes this library meets, and Brent's cycle-finding rho for what survives.
// Used to enumerate divisors for rational root candidates and to validate
// the prime argument of valuations.

#include <algorithm>
#include <map>
#include <vector>

#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"

namespace arrexp {

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long long r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // Deterministic for n < 3.3e24 with these witnesses; far past desk scale.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        unsigned long long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without a factor; retry with next c
            d = gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

}  // namespace detail

// Prime factorization as prime -> exponent, for n >= 1.
inline std::map<Int, long long> factorize(Int n) {
    if (n < 1) throw BadRange("factorization needs n >= 1");
    std::map<Int, long long> out;
    for (Int p : {Int(2), Int(3), Int(5)}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    for (Int p = 7; p * p <= n && p < 1 << 20; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    // Residual beyond trial range: split recursively with rho.
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (is_prime(v)) {
            ++out[v];
            continue;
        }
        Int d = detail::pollard_brent(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    return out;
}

// All positive divisors of n >= 1, ascending.
inline std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{1};
    for (auto& [p, k] : factorize(n)) {
        const std::size_t base = out.size();
        Int pw = 1;
        for (long long i = 1; i <= k; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arrexp
