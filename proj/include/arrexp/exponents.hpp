#pragma once

// Exponents (d1, d2) of a multiarrangement: d1 is the least degree of a
// nonzero derivation tangent to all lines with their multiplicities, and
// d1 + d2 = |m|. Two closed formulas cover the unbalanced and the
// few-lines regimes; the general path searches kernels of the coefficient
// matrices from wy_matrix.hpp degree by degree. A brute-force route that
// never normalizes coordinates and imposes the divisibility conditions
// line by line acts as the independent cross-check.

#include <optional>
#include <utility>
#include <vector>

#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"
#include "arrexp/qmatrix.hpp"
#include "arrexp/wy_matrix.hpp"

namespace arrexp {

enum class Method { UnbalancedFormula, SmallFormula, WYKernelSearch, BruteForce };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::UnbalancedFormula: return "unbalanced-formula";
        case Method::SmallFormula: return "small-formula";
        case Method::WYKernelSearch: return "wy-kernel-search";
        case Method::BruteForce: return "brute-force";
    }
    return "?";
}

struct ExponentResult {
    ExponentPair pair;
    Method method;
    // Present only for the kernel search; coefficients refer to the
    // x/y-normalized image of the input arrangement.
    std::optional<DerivationCoeffs> witness;
};

// Some line carries at least half the total multiplicity; the exponents are
// then that weight and its complement.
inline ExponentResult exponents_unbalanced(const Multiarrangement& A) {
    long long total = A.size();
    long long top = 0;
    for (long long m : A.mults) top = top < m ? m : top;
    if (2 * top < total) throw NotUnbalanced(A.pretty());
    return {ExponentPair(total - top, top), Method::UnbalancedFormula, std::nullopt};
}

// Few lines relative to the total multiplicity: |m| <= 2|A| - 2 forces
// exponents (|m| - |A| + 1, |A| - 1).
inline ExponentResult exponents_small(const Multiarrangement& A) {
    const long long total = A.size();
    const long long n = static_cast<long long>(A.n_lines());
    if (total > 2 * n - 2) throw NotSmall(A.pretty());
    return {ExponentPair(total - n + 1, n - 1), Method::SmallFormula, std::nullopt};
}

// General route: normalize the first two lines to the axes and scan
// e = 0, 1, ... for the first nontrivial kernel. d1 never exceeds |m|/2,
// so the scan is bounded.
inline ExponentResult exponents_wy(const Multiarrangement& A) {
    const long long total = A.size();
    if (A.n_lines() == 1)
        return {ExponentPair(0, total), Method::WYKernelSearch, std::nullopt};

    const Multiarrangement N = normalize_to_xy(A).first;
    for (long long e = 0; e <= total / 2; ++e) {
        WYInstance inst = build_wy(N, e);
        if (inst.matrix.cols() == 0) continue;  // no candidate derivations
        auto basis = kernel_basis(inst.matrix);
        if (basis.empty()) continue;
        DerivationCoeffs w;
        w.degree = e;
        const auto& v = basis.front();
        w.f.assign(v.begin(), v.begin() + inst.shape.f_cols);
        w.g.assign(v.begin() + inst.shape.f_cols, v.end());
        return {ExponentPair(e, total - e), Method::WYKernelSearch, std::move(w)};
    }
    throw Error("kernel search failed below |m|/2; construction is broken");
}

namespace detail {

// Coefficient of the monomial with y-degree j in the k-th transversal
// derivative of a degree-e form, evaluated at the point (b, -a) of the line
// a*x + b*y. The derivative direction is the coordinate axis on which the
// form does not vanish (x when |a| >= |b|), so it is always transversal.
inline Int divisibility_coeff(const Int& a, const Int& b, long long e,
                              long long k, long long j) {
    if (abs(a) >= abs(b)) {
        Int ff = falling_factorial(e - j, k);
        if (ff == 0) return 0;
        return ff * int_pow(b, e - j - k) * int_pow(-a, j);
    }
    Int ff = falling_factorial(j, k);
    if (ff == 0) return 0;
    return ff * int_pow(b, e - j) * int_pow(-a, j - k);
}

// Conditions on theta = p dx + q dy with homogeneous degree-e coefficients:
// for each line H, the first mult(H) transversal derivatives of theta(H)
// vanish along H. Columns are p_0..p_e, q_0..q_e by ascending y-degree.
inline QMatrix divisibility_matrix(const Multiarrangement& A, long long e) {
    std::size_t rows = static_cast<std::size_t>(A.size());
    std::size_t half = static_cast<std::size_t>(e + 1);
    QMatrix M(rows, 2 * half);
    std::size_t row = 0;
    for (std::size_t i = 0; i < A.n_lines(); ++i) {
        const Int& a = A.lines[i].a;
        const Int& b = A.lines[i].b;
        for (long long k = 0; k < A.mults[i]; ++k, ++row) {
            for (long long j = 0; j <= e; ++j) {
                Int c = divisibility_coeff(a, b, e, k, j);
                if (c == 0) continue;
                M.at(row, static_cast<std::size_t>(j)) = Rat(a * c);
                M.at(row, half + static_cast<std::size_t>(j)) = Rat(b * c);
            }
        }
    }
    return M;
}

}  // namespace detail

// Independent oracle: no coordinate normalization, no two-line ansatz, just
// the membership conditions for all lines at once.
inline ExponentResult exponents_bruteforce(const Multiarrangement& A) {
    const long long total = A.size();
    for (long long e = 0; e <= total / 2; ++e) {
        if (!kernel_basis(detail::divisibility_matrix(A, e)).empty())
            return {ExponentPair(e, total - e), Method::BruteForce, std::nullopt};
    }
    throw Error("divisibility search failed below |m|/2; construction is broken");
}

// Fastest applicable route: unbalanced formula, then the few-lines formula,
// then the kernel search.
inline ExponentResult exponents(const Multiarrangement& A) {
    long long top = 0;
    for (long long m : A.mults) top = top < m ? m : top;
    if (2 * top >= A.size()) return exponents_unbalanced(A);
    if (A.size() <= 2 * static_cast<long long>(A.n_lines()) - 2)
        return exponents_small(A);
    return exponents_wy(A);
}

inline long long delta(const Multiarrangement& A) { return exponents(A).pair.delta(); }

// Checks that the encoded theta is nonzero and tangent to every line of the
// x/y-normalized arrangement with the required multiplicity. Runs through
// the same per-line divisibility conditions as the brute-force route, so it
// validates kernel witnesses independently of the matrix construction.
inline bool derivation_in_module(const Multiarrangement& A, const DerivationCoeffs& w) {
    if (!A.is_xy_normalized())
        throw NotNormalized("witness check needs an x/y-normalized arrangement");
    const long long e = w.degree;
    const long long m1 = A.mults[0], m2 = A.mults[1];
    const long long fn = e - m1 + 1 > 0 ? e - m1 + 1 : 0;
    const long long gn = e - m2 + 1 > 0 ? e - m2 + 1 : 0;
    if (static_cast<long long>(w.f.size()) != fn ||
        static_cast<long long>(w.g.size()) != gn)
        throw ShapeMismatch("witness coefficient counts do not match the degree");
    if (w.is_zero()) return false;

    // theta(x) = x^{m1} f and theta(y) = -y^{m2} g as dense coefficient
    // vectors indexed by y-degree.
    std::vector<Rat> p(static_cast<std::size_t>(e + 1), Rat(0));
    std::vector<Rat> q(static_cast<std::size_t>(e + 1), Rat(0));
    for (long long j = 0; j < fn; ++j) p[static_cast<std::size_t>(j)] = w.f[j];
    for (long long j = 0; j < gn; ++j) q[static_cast<std::size_t>(j + m2)] = -w.g[j];

    for (std::size_t i = 0; i < A.n_lines(); ++i) {
        const Int& a = A.lines[i].a;
        const Int& b = A.lines[i].b;
        for (long long k = 0; k < A.mults[i]; ++k) {
            Rat s = 0;
            for (long long j = 0; j <= e; ++j) {
                Int c = detail::divisibility_coeff(a, b, e, k, j);
                if (c != 0)
                    s += Rat(c) * (Rat(a) * p[static_cast<std::size_t>(j)] +
                                   Rat(b) * q[static_cast<std::size_t>(j)]);
            }
            if (s != 0) return false;
        }
    }
    return true;
}

}  // namespace arrexp
