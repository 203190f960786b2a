#pragma once

// Determinant of the square coefficient matrix as an exact polynomial in one
// symbolic slope. The matrix entries are polynomial in each slope, so the
// determinant is recovered by evaluating at enough integer nodes and
// interpolating over the rationals; a degree bound from the symbolic row
// block caps the node count.

#include <cstddef>
#include <utility>
#include <vector>

#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"
#include "arrexp/polynomial.hpp"
#include "arrexp/qmatrix.hpp"
#include "arrexp/wy_matrix.hpp"

namespace arrexp {

// Determinant of the square instance of A with the slope of the given line
// (0-based index, at least 2) replaced by a variable. The line's concrete
// slope in A is irrelevant to the result; it only serves distinctness.
inline IntPolynomial det_wy_polynomial(const Multiarrangement& A, std::size_t symbolic_line) {
    if (!A.is_xy_normalized())
        throw NotNormalized("symbolic determinant needs lines 1, 2 equal to x, y");
    if (symbolic_line >= A.n_lines()) throw IndexOutOfRange("symbolic line index");
    if (symbolic_line < 2)
        throw DegenerateTemplate("the symbolic slot must be a slope line, not x or y");
    if (A.size() % 2 != 0) throw OddSize("square instance needs even |m|");
    if (!is_balanced(A)) throw Unbalanced(A.pretty());

    const long long m1 = A.mults[0], m2 = A.mults[1];
    const long long e = A.size() / 2 - 1;
    const BlockShape probe = detail::wy_shape(
        m1, m2, std::vector<long long>(A.mults.begin() + 2, A.mults.end()), e);

    // Degree bound: the variable appears only in the symbolic block; row k
    // contributes at most the largest power of the slope in that row.
    long long bound = 0;
    const long long mu = A.mults[symbolic_line];
    for (long long k = 0; k < mu; ++k) {
        long long best = 0;
        if (probe.f_cols > 0 && e - k > best) best = e - k;
        if (probe.g_cols > 0 && e - m2 + 1 - k > best) best = e - m2 + 1 - k;
        bound += best;
    }

    std::vector<Rat> fixed;
    bool fixed_integral = true;
    for (std::size_t i = 2; i < A.n_lines(); ++i) {
        if (i == symbolic_line) continue;
        Rat s = A.lines[i].slope();
        if (!is_integral(s)) fixed_integral = false;
        fixed.push_back(std::move(s));
    }

    // Nodes: positive integers, skipping zero by construction and any value
    // that collides with a fixed slope.
    std::vector<std::pair<Rat, Rat>> points;
    for (long long t = 1; static_cast<long long>(points.size()) < bound + 1; ++t) {
        Rat node(t);
        bool clash = false;
        for (const Rat& s : fixed)
            if (s == node) clash = true;
        if (clash) continue;

        std::vector<std::pair<Rat, long long>> tail;
        for (std::size_t i = 2; i < A.n_lines(); ++i)
            tail.emplace_back(i == symbolic_line ? node : A.lines[i].slope(),
                              A.mults[i]);
        QMatrix M = detail::wy_entries(m1, m2, tail, e);
        points.emplace_back(node, determinant(M));
    }

    detail::RPoly interp = detail::lagrange_interpolate(points);
    if (fixed_integral) {
        // Integer slopes make every matrix entry integral, so a fractional
        // coefficient can only mean the interpolation went wrong.
        for (const Rat& v : interp)
            if (!is_integral(v))
                throw Error("non-integer coefficient in symbolic determinant");
        std::vector<Int> c;
        c.reserve(interp.size());
        for (const Rat& v : interp) c.push_back(num(v));
        return IntPolynomial(std::move(c));
    }
    return detail::rpoly_clear_denominators(interp);
}

}  // namespace arrexp
