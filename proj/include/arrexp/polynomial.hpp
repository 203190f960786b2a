#pragma once

// Univariate polynomials with exact integer coefficients, plus the rational
// scratch arithmetic (division, gcd, interpolation) that the root finder and
// the square-free splitter need. Coefficients are stored in ascending degree
// with no trailing zeros; the zero polynomial has no coefficients.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arrexp/errors.hpp"
#include "arrexp/intfactor.hpp"
#include "arrexp/numeric.hpp"

namespace arrexp {

struct IntPolynomial {
    std::vector<Int> c;  // ascending degree, trimmed

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long long degree() const { return static_cast<long long>(c.size()) - 1; }

    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

    Rat eval(const Rat& x) const {
        Rat v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    IntPolynomial derivative() const {
        std::vector<Int> d;
        for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Int(i));
        return IntPolynomial(std::move(d));
    }

    // gcd of the coefficients; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const Int& v : c) g = gcd(g, abs(v));
        return g;
    }

    bool operator==(const IntPolynomial& o) const { return c == o.c; }

    // "2*z^4 - 2*z^2" style rendering, highest degree first.
    std::string str(const std::string& var) const {
        if (c.empty()) return "0";
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            Int v = c[i];
            if (out.empty()) {
                if (v < 0) out += "-";
            } else {
                out += v < 0 ? " - " : " + ";
            }
            Int av = abs(v);
            if (i == 0) {
                out += av.str();
            } else {
                if (av != 1) out += av.str() + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }
};

namespace detail {

using RPoly = std::vector<Rat>;  // ascending degree, trimmed

inline void rtrim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RPoly rpoly_from(const IntPolynomial& p) {
    RPoly r(p.c.begin(), p.c.end());
    return r;
}

inline Rat rpoly_eval(const RPoly& p, const Rat& x) {
    Rat v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

inline RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    rtrim(c);
    return c;
}

inline RPoly rpoly_sub(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rtrim(a);
    return a;
}

inline RPoly rpoly_derivative(const RPoly& p) {
    RPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(Int(i)));
    return d;
}

// Quotient and remainder of a by b, b nonzero.
inline std::pair<RPoly, RPoly> rpoly_divmod(RPoly a, const RPoly& b) {
    if (b.empty()) throw ZeroPolynomial("polynomial division by zero");
    RPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        rtrim(a);
    }
    rtrim(q);
    return {q, a};
}

// Monic gcd over the rationals; gcd(0, 0) is 0.
inline RPoly rpoly_gcd(RPoly a, RPoly b) {
    rtrim(a);
    rtrim(b);
    while (!b.empty()) {
        RPoly r = rpoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& v : a) v /= lead;
    }
    return a;
}

// Unique polynomial of degree < #points through the given points with
// pairwise distinct abscissae.
inline RPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    RPoly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        RPoly basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            basis = rpoly_mul(basis, RPoly{-pts[j].first, Rat(1)});
            denom *= pts[i].first - pts[j].first;
        }
        if (denom == 0) throw BadRange("interpolation nodes must be distinct");
        Rat w = pts[i].second / denom;
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rat(0));
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += w * basis[k];
    }
    rtrim(acc);
    return acc;
}

// Integer polynomial from rational coefficients scaled by the lcm of the
// denominators (the smallest positive scalar making everything integral).
inline IntPolynomial rpoly_clear_denominators(const RPoly& p, Int* scale_out = nullptr) {
    Int l = 1;
    for (const Rat& v : p) l = lcm(l, den(v));
    std::vector<Int> c;
    c.reserve(p.size());
    for (const Rat& v : p) c.push_back(num(v) * (l / den(v)));
    if (scale_out) *scale_out = l;
    return IntPolynomial(std::move(c));
}

// Primitive integer form with positive leading coefficient; also reports the
// rational factor r with input == r * primitive.
inline IntPolynomial rpoly_primitive(const RPoly& p, Rat* factor_out = nullptr) {
    Int scale = 1;
    IntPolynomial z = rpoly_clear_denominators(p, &scale);
    if (z.is_zero()) {
        if (factor_out) *factor_out = 0;
        return z;
    }
    Int cont = z.content();
    Int sign = z.c.back() < 0 ? -1 : 1;
    for (Int& v : z.c) v /= cont * sign;
    if (factor_out) *factor_out = Rat(cont * sign, scale);
    return z;
}

}  // namespace detail

// Rational roots with multiplicities, ascending by value. Candidates come
// from the divisors of the trailing and leading coefficients; each confirmed
// root is divided out to count its multiplicity.
inline std::vector<std::pair<Rat, long long>> rational_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
    std::vector<std::pair<Rat, long long>> roots;

    std::size_t k = 0;
    while (k < p.c.size() && p.c[k] == 0) ++k;
    if (k > 0) roots.emplace_back(Rat(0), static_cast<long long>(k));

    detail::RPoly q(p.c.begin() + static_cast<long long>(k), p.c.end());
    if (q.size() <= 1) return roots;

    const Int c0 = abs(num(q.front()));
    const Int cd = abs(num(q.back()));
    std::vector<Rat> candidates;
    for (const Int& nu : divisors(c0))
        for (const Int& de : divisors(cd))
            if (gcd(nu, de) == 1) {
                candidates.emplace_back(Rat(nu, de));
                candidates.emplace_back(Rat(-nu, de));
            }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rat& r : candidates) {
        long long mult = 0;
        while (q.size() > 1 && detail::rpoly_eval(q, r) == 0) {
            // synthetic division by (z - r)
            detail::RPoly d(q.size() - 1);
            Rat carry = q.back();
            for (std::size_t i = q.size() - 1; i-- > 0;) {
                d[i] = carry;
                carry = q[i] + r * carry;
            }
            q = std::move(d);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

struct SquareFreeFactor {
    IntPolynomial factor;  // primitive, positive leading coefficient
    long long multiplicity = 0;
};

// Yun's algorithm over the rationals: p == unit * prod factor_i^mult_i with
// pairwise coprime square-free factors of distinct multiplicities.
inline std::pair<Rat, std::vector<SquareFreeFactor>>
square_free_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("square-free split of the zero polynomial");
    std::vector<SquareFreeFactor> out;
    if (p.degree() == 0) return {Rat(p.c[0]), out};

    detail::RPoly f = detail::rpoly_from(p);
    detail::RPoly g = detail::rpoly_gcd(f, detail::rpoly_derivative(f));
    detail::RPoly ci = detail::rpoly_divmod(f, g).first;
    detail::RPoly di =
        detail::rpoly_sub(detail::rpoly_divmod(detail::rpoly_derivative(f), g).first,
                          detail::rpoly_derivative(ci));
    for (long long i = 1; ci.size() > 1; ++i) {
        detail::RPoly ai = detail::rpoly_gcd(ci, di);
        ci = detail::rpoly_divmod(ci, ai).first;
        di = detail::rpoly_sub(detail::rpoly_divmod(di, ai).first,
                               detail::rpoly_derivative(ci));
        if (ai.size() > 1) out.push_back({detail::rpoly_primitive(ai), i});
    }
    // The factors are primitive with positive lead, so their product is too
    // and the unit is fixed by comparing leading coefficients.
    Rat lead_prod = 1;
    for (const auto& sf : out)
        lead_prod *= rat_pow(Rat(sf.factor.c.back()), sf.multiplicity);
    return {Rat(p.c.back()) / lead_prod, out};
}

}  // namespace arrexp
