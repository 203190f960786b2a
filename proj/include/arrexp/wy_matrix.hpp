#pragma once

// Coefficient matrices deciding whether an x/y-normalized multiarrangement
// admits a derivation x^{m1} f dx - y^{m2} g dy of a given degree e. Lines 1
// and 2 are absorbed by the ansatz; every remaining line contributes one row
// block of derivative conditions at its slope. A degree-e derivation exists
// exactly when the matrix has a nontrivial kernel.
//
// Row block of line i (slope s, multiplicity mu), local row k < mu:
//   f column j:  (e-j)(e-j-1)...(e-j-k+1) * s^{e-j-k}
//   g column j:  s * (e-m2-j)...(e-m2-j-k+1) * s^{e-m2-j-k}
// An entry is zero exactly when its falling-factorial factor vanishes, so no
// negative powers of s ever appear in the matrix itself.
//
// The matrix factors entrywise as P (pure slope powers, slope-dependent)
// Hadamard W (falling factorials, slope-independent Wronski blocks).

#include <cstddef>
#include <utility>
#include <vector>

#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"
#include "arrexp/qmatrix.hpp"
#include "arrexp/tuples.hpp"
#include "arrexp/wronskian.hpp"

namespace arrexp {

struct WYInstance {
    Multiarrangement arr;     // x/y-normalized
    long long e = 0;
    std::vector<Rat> slopes;  // s_3..s_n, in line order
    BlockShape shape;
    QMatrix matrix;

    // First row of the block belonging to tail line i (0-based into slopes).
    std::size_t block_row_offset(std::size_t i) const {
        std::size_t off = 0;
        for (std::size_t t = 0; t < i; ++t)
            off += static_cast<std::size_t>(shape.row_blocks[t]);
        return off;
    }
};

namespace detail {

inline BlockShape wy_shape(long long m1, long long m2,
                           const std::vector<long long>& tail_mults, long long e) {
    BlockShape s;
    s.row_blocks = tail_mults;
    s.f_cols = e - m1 + 1 > 0 ? e - m1 + 1 : 0;
    s.g_cols = e - m2 + 1 > 0 ? e - m2 + 1 : 0;
    return s;
}

// Entry assembly shared by the arrangement path and the symbolic evaluator,
// which feeds numeric slope values directly.
inline QMatrix wy_entries(long long m1, long long m2,
                          const std::vector<std::pair<Rat, long long>>& tail,
                          long long e) {
    std::vector<long long> tail_mults;
    for (auto& [s, mu] : tail) tail_mults.push_back(mu);
    BlockShape shape = wy_shape(m1, m2, tail_mults, e);

    QMatrix M(static_cast<std::size_t>(shape.total_rows()),
              static_cast<std::size_t>(shape.total_cols()));
    std::size_t row = 0;
    for (auto& [s, mu] : tail) {
        std::vector<Rat> pw(static_cast<std::size_t>(e + 2));
        pw[0] = 1;
        for (std::size_t t = 1; t < pw.size(); ++t) pw[t] = pw[t - 1] * s;
        for (long long k = 0; k < mu; ++k, ++row) {
            for (long long j = 0; j < shape.f_cols; ++j) {
                Int ff = falling_factorial(e - j, k);
                if (ff != 0)
                    M.at(row, static_cast<std::size_t>(j)) =
                        Rat(ff) * pw[static_cast<std::size_t>(e - j - k)];
            }
            for (long long j = 0; j < shape.g_cols; ++j) {
                Int ff = falling_factorial(e - m2 - j, k);
                if (ff != 0)
                    M.at(row, static_cast<std::size_t>(shape.f_cols + j)) =
                        Rat(ff) * pw[static_cast<std::size_t>(e - m2 - j - k + 1)];
            }
        }
    }
    return M;
}

}  // namespace detail

inline WYInstance build_wy(const Multiarrangement& A, long long e) {
    if (!A.is_xy_normalized())
        throw NotNormalized("coefficient matrix needs lines 1, 2 equal to x, y");
    if (e < 0) throw BadRange("degree must be nonnegative");

    WYInstance inst;
    inst.arr = A;
    inst.e = e;
    inst.slopes = A.tail_slopes();
    std::vector<std::pair<Rat, long long>> tail;
    std::vector<long long> tail_mults(A.mults.begin() + 2, A.mults.end());
    for (std::size_t i = 0; i < inst.slopes.size(); ++i)
        tail.emplace_back(inst.slopes[i], tail_mults[i]);
    inst.shape = detail::wy_shape(A.mults[0], A.mults[1], tail_mults, e);
    inst.matrix = detail::wy_entries(A.mults[0], A.mults[1], tail, e);
    return inst;
}

// Square instance at e = |m|/2 - 1. Needs |m| even and the arrangement
// balanced; then row and column counts agree and a nontrivial kernel is
// equivalent to an exponent gap of at least 2.
inline WYInstance build_square_wy(const Multiarrangement& A) {
    if (!A.is_xy_normalized())
        throw NotNormalized("coefficient matrix needs lines 1, 2 equal to x, y");
    if (A.size() % 2 != 0) throw OddSize("square instance needs even |m|");
    if (!is_balanced(A)) throw Unbalanced(A.pretty());
    WYInstance inst = build_wy(A, A.size() / 2 - 1);
    if (inst.shape.total_rows() != inst.shape.total_cols())
        throw ShapeMismatch("square instance construction is inconsistent");
    return inst;
}

// Matrix of pure powers t^{a_c - r}, r = 0..k-1, columns indexed by the
// tuple. Exponents may be negative, so t must be nonzero.
inline QMatrix power_matrix(const Rat& t, long long k, const NNTuple& a) {
    if (t == 0) throw ZeroInput("power matrix needs a nonzero base");
    if (k < 1 || a.empty()) throw BadRange("power matrix needs k >= 1, nonempty tuple");
    QMatrix P(static_cast<std::size_t>(k), a.size());
    for (long long r = 0; r < k; ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            P.at(static_cast<std::size_t>(r), c) = rat_pow(t, a[c] - r);
    return P;
}

namespace detail {

// Assembles the slope-power factor (with the extra s on the g part) or the
// slope-independent Wronski factor of the square instance.
template <bool PowerPart>
QMatrix wy_factor(const Multiarrangement& A) {
    if (!A.is_xy_normalized())
        throw NotNormalized("factorization needs lines 1, 2 equal to x, y");
    if (A.size() % 2 != 0) throw OddSize("factorization is for the square instance");
    if (!is_balanced(A)) throw Unbalanced(A.pretty());

    const long long m1 = A.mults[0], m2 = A.mults[1];
    const long long e = A.size() / 2 - 1;
    const NNTuple fa = range_tuple(e, m1);
    const NNTuple ga = range_tuple(e - m2, 0);
    const std::vector<Rat> slopes = A.tail_slopes();

    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const long long mu = A.mults[i + 2];
        QMatrix F = PowerPart ? power_matrix(slopes[i], mu, fa)
                              : wronski_matrix(mu, fa).to_qmatrix();
        QMatrix G = PowerPart ? power_matrix(slopes[i], mu, ga)
                              : wronski_matrix(mu, ga).to_qmatrix();
        for (std::size_t r = 0; r < F.rows(); ++r) {
            std::vector<Rat> row;
            row.reserve(F.cols() + G.cols());
            for (std::size_t c = 0; c < F.cols(); ++c) row.push_back(F.at(r, c));
            for (std::size_t c = 0; c < G.cols(); ++c)
                row.push_back(PowerPart ? slopes[i] * G.at(r, c) : G.at(r, c));
            rows.push_back(std::move(row));
        }
    }
    return QMatrix::from_rows(rows);
}

}  // namespace detail

inline QMatrix build_P(const Multiarrangement& A) { return detail::wy_factor<true>(A); }
inline QMatrix build_W(const Multiarrangement& A) { return detail::wy_factor<false>(A); }

inline bool check_factorization(const Multiarrangement& A) {
    return build_square_wy(A).matrix == hadamard(build_P(A), build_W(A));
}

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& seq) {
    long long inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline void laplace_rec(const WYInstance& inst, std::size_t block,
                        const std::vector<std::size_t>& avail,
                        std::vector<std::size_t>& chosen, const Rat& partial,
                        Rat& total) {
    const auto& blocks = inst.shape.row_blocks;
    if (block == blocks.size()) {
        total += partial * permutation_sign(chosen);
        return;
    }
    const std::size_t width = static_cast<std::size_t>(blocks[block]);
    const std::size_t row0 = inst.block_row_offset(block);
    std::vector<std::size_t> rows(width);
    for (std::size_t r = 0; r < width; ++r) rows[r] = row0 + r;

    // Ascending combinations of `width` columns from the still-free ones.
    std::vector<std::size_t> idx(width);
    for (std::size_t i = 0; i < width; ++i) idx[i] = i;
    while (true) {
        std::vector<std::size_t> cols(width);
        for (std::size_t i = 0; i < width; ++i) cols[i] = avail[idx[i]];
        Rat d = minor_det(inst.matrix, rows, cols);
        if (d != 0) {  // zero minors contribute nothing
            std::vector<std::size_t> rest;
            rest.reserve(avail.size() - width);
            std::size_t t = 0;
            for (std::size_t i = 0; i < avail.size(); ++i) {
                if (t < width && idx[t] == i) ++t;
                else rest.push_back(avail[i]);
            }
            const std::size_t mark = chosen.size();
            chosen.insert(chosen.end(), cols.begin(), cols.end());
            laplace_rec(inst, block + 1, rest, chosen, partial * d, total);
            chosen.resize(mark);
        }
        std::size_t i = width;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] != i + avail.size() - width) {
                ++idx[i];
                for (std::size_t j = i + 1; j < width; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

}  // namespace detail

// Determinant as a sum over column partitions: each row block takes an
// ascending column set of its own height, the term is the product of the
// block minors, and the sign is the parity of the concatenated column order.
inline Rat laplace_expansion_det(const WYInstance& inst) {
    if (inst.matrix.rows() != inst.matrix.cols())
        throw NotSquare("block expansion needs a square instance");
    std::vector<std::size_t> avail(inst.matrix.cols());
    for (std::size_t c = 0; c < avail.size(); ++c) avail[c] = c;
    std::vector<std::size_t> chosen;
    Rat total = 0;
    detail::laplace_rec(inst, 0, avail, chosen, Rat(1), total);
    return total;
}

// Product of the block minors on consecutive column windows, the single
// partition term whose column blocks sit on the diagonal.
inline Rat diagonal_minor_product(const WYInstance& inst) {
    if (inst.matrix.rows() != inst.matrix.cols())
        throw NotSquare("diagonal minors need a square instance");
    Rat prod = 1;
    std::size_t off = 0;
    for (std::size_t b = 0; b < inst.shape.row_blocks.size(); ++b) {
        const std::size_t width = static_cast<std::size_t>(inst.shape.row_blocks[b]);
        const std::size_t row0 = inst.block_row_offset(b);
        std::vector<std::size_t> rows(width), cols(width);
        for (std::size_t i = 0; i < width; ++i) {
            rows[i] = row0 + i;
            cols[i] = off + i;
        }
        prod *= minor_det(inst.matrix, rows, cols);
        off += width;
    }
    return prod;
}

}  // namespace arrexp
