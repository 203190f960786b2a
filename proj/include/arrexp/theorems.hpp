#pragma once

// Checkable statements about exponent gaps. The certificate search covers
// arrangements x^{m1} y^{m2} (x - s_3 y)^{m3} ... with integer slopes: when
// the tail splits into two groups that each absorb exactly half the total
// multiplicity together with one coordinate line, the gap is zero. Two
// specializations classify the four-line case with slopes 1 and -1, and the
// zero-locus routine isolates the rational slopes where a gap of at least 2
// is possible at all.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"
#include "arrexp/polynomial.hpp"
#include "arrexp/symbolic.hpp"

namespace arrexp {

struct MainTheoremCertificate {
    // 1-based line numbers from {3..n}, both nonempty.
    std::vector<std::size_t> I1, I2;
    long long half = 0;  // the shared sum |m|/2
};

namespace detail {

// Shape hypotheses shared by the search and the explicit-partition check:
// x/y-normalized, at least four lines, integer slopes outside {0, -1} that
// are pairwise coprime, even size, and m1 + m2 > |m|/2.
inline bool main_shape_ok(const Multiarrangement& A, std::vector<Int>& slopes) {
    if (A.n_lines() < 4 || !A.is_xy_normalized()) return false;
    if (A.size() % 2 != 0) return false;
    if (2 * (A.mults[0] + A.mults[1]) <= A.size()) return false;
    slopes.clear();
    for (std::size_t i = 2; i < A.n_lines(); ++i) {
        Rat s = A.lines[i].slope();
        if (!is_integral(s)) return false;
        Int v = num(s);
        if (v == 0 || v == -1) return false;
        slopes.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < slopes.size(); ++i)
        for (std::size_t j = i + 1; j < slopes.size(); ++j)
            if (gcd(abs(slopes[i]), abs(slopes[j])) != 1) return false;
    return true;
}

}  // namespace detail

// Validity of one explicit partition (1-based line numbers) against all the
// certificate conditions.
inline bool main_certificate_valid(const Multiarrangement& A,
                                   const std::vector<std::size_t>& I1,
                                   const std::vector<std::size_t>& I2) {
    std::vector<Int> slopes;
    if (!detail::main_shape_ok(A, slopes)) return false;
    if (I1.empty() || I2.empty()) return false;

    const std::size_t n = A.n_lines();
    std::vector<int> seen(n + 1, 0);
    for (std::size_t v : I1) {
        if (v < 3 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t v : I2) {
        if (v < 3 || v > n || seen[v]) return false;
        seen[v] = 2;
    }
    for (std::size_t v = 3; v <= n; ++v)
        if (!seen[v]) return false;

    const long long half = A.size() / 2;
    long long s1 = A.mults[0], s2 = A.mults[1];
    for (std::size_t v : I1) s1 += A.mults[v - 1];
    for (std::size_t v : I2) {
        s2 += A.mults[v - 1];
        if (slopes[v - 3] == 1) return false;  // slope 1 may not sit in I2
    }
    return s1 == half && s2 == half;
}

// Searches tail partitions in deterministic order (ascending bitmask over
// lines 3..n, bit i choosing line i+3 for I1) and returns the first valid
// certificate, or nothing when the hypotheses or every partition fail.
inline std::optional<MainTheoremCertificate> main_theorem_applies(const Multiarrangement& A) {
    std::vector<Int> slopes;
    if (!detail::main_shape_ok(A, slopes)) return std::nullopt;

    const std::size_t t = A.n_lines() - 2;
    if (t >= 32) throw BadRange("partition search is limited to 33 lines");
    const long long half = A.size() / 2;
    for (unsigned long long mask = 1; mask + 1 < (1ull << t); ++mask) {
        MainTheoremCertificate cert;
        cert.half = half;
        for (std::size_t i = 0; i < t; ++i)
            ((mask >> i) & 1 ? cert.I1 : cert.I2).push_back(i + 3);
        if (main_certificate_valid(A, cert.I1, cert.I2)) return cert;
    }
    return std::nullopt;
}

// Four lines x, y, x-y, x+y with multiplicities (m1, m2, m3, m4).
struct B2Spec {
    long long m1 = 1, m2 = 1, m3 = 1, m4 = 1;

    long long size() const { return m1 + m2 + m3 + m4; }

    bool balanced() const {
        const long long s = size();
        return 2 * m1 < s && 2 * m2 < s && 2 * m3 < s && 2 * m4 < s;
    }

    Multiarrangement to_arrangement() const {
        return normalize_arrangement({{1, 0}, {0, 1}, {1, -1}, {1, 1}},
                                     {m1, m2, m3, m4});
    }
};

// Reads a B2 shape off a normalized four-line arrangement whose tail slopes
// are exactly {1, -1}.
inline std::optional<B2Spec> as_b2(const Multiarrangement& A) {
    if (A.n_lines() != 4 || !A.is_xy_normalized()) return std::nullopt;
    const Rat s3 = A.lines[2].slope();
    const Rat s4 = A.lines[3].slope();
    B2Spec b;
    b.m1 = A.mults[0];
    b.m2 = A.mults[1];
    if (s3 == 1 && s4 == -1) {
        b.m3 = A.mults[2];
        b.m4 = A.mults[3];
    } else if (s3 == -1 && s4 == 1) {
        b.m3 = A.mults[3];
        b.m4 = A.mults[2];
    } else {
        return std::nullopt;
    }
    return b;
}

// Equal nonzero gaps |m2 - m1| = |m4 - m3| >= 1 force a zero exponent gap.
inline bool b2_equal_gap_delta_zero(const B2Spec& b) {
    const long long g1 = b.m2 > b.m1 ? b.m2 - b.m1 : b.m1 - b.m2;
    const long long g2 = b.m4 > b.m3 ? b.m4 - b.m3 : b.m3 - b.m4;
    return g1 == g2 && g1 >= 1;
}

// Gap classification for the zero-gap diagonal m3 == m4 (balanced): the gap
// is 1 for odd |m|; for even |m| it is 2 exactly when m1, m2, and the square
// degree e = |m|/2 - 1 are all odd, and 0 otherwise.
inline long long b2_zero_gap_classification(const B2Spec& b) {
    if (b.m3 != b.m4) throw NotApplicable("classification needs m3 == m4");
    if (!b.balanced()) throw Unbalanced("classification needs a balanced B2 shape");
    if (b.size() % 2 != 0) return 1;
    const long long e = b.size() / 2 - 1;
    const bool odd = b.m1 % 2 != 0 && b.m2 % 2 != 0 && e % 2 != 0;
    return odd ? 2 : 0;
}

// Rational slopes z where the four-line template x^{m1} y^{m2} (x - s3 y)^{m3}
// (x - z y)^{m4} can have an exponent gap of at least 2: the rational roots
// of the symbolic square determinant. Roots equal to 0 or s3 do not describe
// arrangements; they are still reported.
inline std::vector<Rat> finite_zero_locus(const std::array<long long, 4>& m, const Rat& s3) {
    const long long total = m[0] + m[1] + m[2] + m[3];
    if (total % 2 != 0) throw OddSize("zero locus needs even |m|");
    if (m[0] == 1 && m[1] == 1 && m[2] == 1 && m[3] == 1)
        throw NotApplicable("the simple multiplicity (1,1,1,1) is excluded");
    for (long long mi : m)
        if (2 * mi >= total) throw Unbalanced("zero locus needs a balanced tuple");

    // Placeholder slope for the symbolic slot; its value is ignored by the
    // symbolic determinant but must keep the lines distinct.
    Rat placeholder = 1;
    while (placeholder == s3 || placeholder == 0) placeholder += 1;
    LineForm fixed = line_from_slope(s3);
    LineForm sym = line_from_slope(placeholder);
    Multiarrangement A = normalize_arrangement(
        {{1, 0}, {0, 1}, {fixed.a, fixed.b}, {sym.a, sym.b}},
        {m[0], m[1], m[2], m[3]});

    IntPolynomial det = det_wy_polynomial(A, 3);
    if (det.is_zero())
        throw IdenticallyZero("symbolic determinant vanished; construction is broken");

    std::vector<Rat> roots;
    for (auto& [r, mult] : rational_roots(det)) roots.push_back(r);
    return roots;
}

}  // namespace arrexp
