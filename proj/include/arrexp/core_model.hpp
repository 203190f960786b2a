#pragma once

// Core model for multiarrangements of lines through the origin: a list of
// distinct linear forms a*x + b*y with a positive multiplicity each, plus the
// invertible coordinate changes used to bring the first two lines to the
// coordinate axes. Forms are kept in a canonical shape (coprime integer
// coefficients, first nonzero coefficient positive) so line identity is
// plain equality.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"

namespace arrexp {

struct LineForm {
    Int a, b;  // coefficients of a*x + b*y

    static LineForm normalized(Int a, Int b) {
        if (a == 0 && b == 0) throw ZeroForm("line form requires (a, b) != (0, 0)");
        Int g = gcd(abs(a), abs(b));
        a /= g;
        b /= g;
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
        }
        return LineForm{std::move(a), std::move(b)};
    }

    bool operator==(const LineForm& o) const { return a == o.a && b == o.b; }

    bool is_x_axis() const { return a == 1 && b == 0; }
    bool is_y_axis() const { return a == 0 && b == 1; }

    // Slope s of the kernel line written as x - s*y; only forms with a != 0
    // have one (the form y has no finite x-slope in this convention).
    Rat slope() const {
        if (a == 0) throw BadRange("form y has no slope");
        return Rat(-b, a);
    }

    std::string pretty() const {
        auto term = [](const Int& c, const char* var) -> std::string {
            if (c == 0) return "";
            std::string s;
            if (c == 1) s = "";
            else if (c == -1) s = "-";
            else s = c.str();
            return s + var;
        };
        std::string ax = term(a, "x");
        std::string by = term(b, "y");
        if (ax.empty()) return by;
        if (by.empty()) return ax;
        if (b > 0) return ax + "+" + by;
        return ax + by;  // negative b already prints its sign
    }
};

// Line x - s*y for a rational slope s, in canonical integer form.
inline LineForm line_from_slope(const Rat& s) {
    return LineForm::normalized(den(s), -num(s));
}

struct Multiarrangement {
    std::vector<LineForm> lines;
    std::vector<long long> mults;

    std::size_t n_lines() const { return lines.size(); }

    // Total multiplicity |m|.
    long long size() const {
        long long s = 0;
        for (long long m : mults) s += m;
        return s;
    }

    std::size_t index_of(const LineForm& h) const {
        const LineForm n = LineForm::normalized(h.a, h.b);  // stored lines are normalized
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (lines[i] == n) return i;
        throw LineNotInArrangement(h.pretty());
    }

    bool is_xy_normalized() const {
        return lines.size() >= 2 && lines[0].is_x_axis() && lines[1].is_y_axis();
    }

    // Slopes s_i of lines 3..n in an x/y-normalized arrangement.
    std::vector<Rat> tail_slopes() const {
        if (!is_xy_normalized())
            throw NotNormalized("tail slopes need the first two lines to be x and y");
        std::vector<Rat> s;
        for (std::size_t i = 2; i < lines.size(); ++i) s.push_back(lines[i].slope());
        return s;
    }

    std::string pretty() const {
        std::string out;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            out += "(" + lines[i].pretty() + ")";
            if (mults[i] != 1) out += "^" + std::to_string(mults[i]);
        }
        return out;
    }
};

inline Multiarrangement normalize_arrangement(const std::vector<std::pair<Int, Int>>& raw,
                                              const std::vector<long long>& mults) {
    if (raw.empty() || raw.size() != mults.size())
        throw InvalidConfig("need equally many lines and multiplicities, at least one");
    Multiarrangement A;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        LineForm f = LineForm::normalized(raw[i].first, raw[i].second);
        for (const LineForm& seen : A.lines)
            if (seen == f) throw DuplicateLine(f.pretty());
        if (mults[i] < 1) throw NonPositiveMult(std::to_string(mults[i]));
        A.lines.push_back(std::move(f));
        A.mults.push_back(mults[i]);
    }
    return A;
}

struct Transform2 {
    Rat a, b, c, d;  // row-major [[a, b], [c, d]]

    static Transform2 identity() { return {1, 0, 0, 1}; }

    Rat det() const { return a * d - b * c; }

    Transform2 inverse() const {
        Rat dt = det();
        if (dt == 0) throw SingularTransform("inverse of singular transform");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    Transform2 operator*(const Transform2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    bool operator==(const Transform2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

// Rewrite every form in the new coordinates (X, Y)^T = T (x, y)^T. The form
// coefficients transform by the adjugate of T: scaling a form by the nonzero
// det(T) does not move its kernel, so no division is needed.
inline Multiarrangement apply_transform(const Multiarrangement& A, const Transform2& T) {
    if (T.det() == 0) throw SingularTransform("transform must be invertible");
    std::vector<std::pair<Int, Int>> raw;
    raw.reserve(A.lines.size());
    for (const LineForm& f : A.lines) {
        Rat na = Rat(f.a) * T.d - Rat(f.b) * T.c;
        Rat nb = Rat(f.b) * T.a - Rat(f.a) * T.b;
        Int l = lcm(den(na), den(nb));
        raw.emplace_back(num(na) * (l / den(na)), num(nb) * (l / den(nb)));
    }
    return normalize_arrangement(raw, A.mults);
}

// Coordinate change sending line 1 to ker(x) and line 2 to ker(y), together
// with the transform that realizes it. Already-normalized input comes back
// unchanged with the identity.
inline std::pair<Multiarrangement, Transform2> normalize_to_xy(const Multiarrangement& A) {
    if (A.n_lines() < 2) throw TooFewLines("normalization needs two lines");
    if (A.is_xy_normalized()) return {A, Transform2::identity()};
    Transform2 T{Rat(A.lines[0].a), Rat(A.lines[0].b),
                 Rat(A.lines[1].a), Rat(A.lines[1].b)};
    return {apply_transform(A, T), T};
}

// Balanced: every multiplicity is strictly below half the total.
inline bool is_balanced(const Multiarrangement& A) {
    const long long total = A.size();
    for (long long m : A.mults)
        if (2 * m >= total) return false;
    return true;
}

// One multiplicity bumped by +-1; multiplicities stay >= 1.
inline Multiarrangement add_delta_H(const Multiarrangement& A, const LineForm& H, int sign) {
    if (sign != 1 && sign != -1) throw BadRange("delta step sign must be +1 or -1");
    Multiarrangement B = A;
    std::size_t i = B.index_of(H);
    if (sign < 0 && B.mults[i] <= 1) throw MultiplicityUnderflow(H.pretty());
    B.mults[i] += sign;
    return B;
}

struct ExponentPair {
    long long d1, d2;

    ExponentPair(long long lo, long long hi) : d1(lo), d2(hi) {
        if (d1 > d2) std::swap(d1, d2);
        if (d1 < 0) throw BadRange("exponents are nonnegative");
    }

    long long delta() const { return d2 - d1; }
    long long sum() const { return d1 + d2; }
    bool operator==(const ExponentPair& o) const { return d1 == o.d1 && d2 == o.d2; }
};

// Coefficients of a derivation x^{m1} f dx - y^{m2} g dy of the given degree
// with respect to an x/y-normalized arrangement: f[j] multiplies
// x^{e-m1-j} y^j and g[j] multiplies x^{e-m2-j} y^j.
struct DerivationCoeffs {
    long long degree = 0;
    std::vector<Rat> f, g;

    bool is_zero() const {
        for (const Rat& v : f)
            if (v != 0) return false;
        for (const Rat& v : g)
            if (v != 0) return false;
        return true;
    }
};

}  // namespace arrexp
