#pragma once

// Dense matrices over the rationals with exact rank, determinant, and kernel
// computations. Elimination is fraction-free (Bareiss): rows are scaled to a
// common integer denominator once, and every intermediate value stays an
// integer minor of the scaled matrix, so there is no rational normalization
// inside the hot loop. Pivots take the largest absolute entry in the current
// column; ties go to the first admissible row.

#include <cstddef>
#include <utility>
#include <vector>

#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"

namespace arrexp {

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ShapeMismatch("ragged row list");
            for (std::size_t j = 0; j < c; ++j) m.a_[i * c + j] = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) {
        check(r, c);
        return a_[r * cols_ + c];
    }
    const Rat& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return a_[r * cols_ + c];
    }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix access");
    }

    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Row-block / column-split bookkeeping for matrices assembled from per-line
// blocks with a left (f) and right (g) column group.
struct BlockShape {
    std::vector<long long> row_blocks;
    long long f_cols = 0;
    long long g_cols = 0;

    long long total_rows() const {
        long long s = 0;
        for (long long b : row_blocks) s += b;
        return s;
    }
    long long total_cols() const { return f_cols + g_cols; }
};

namespace detail {

// Integer copy of M with each row scaled by the lcm of its denominators.
// Scaling rows leaves rank and kernel unchanged and multiplies the
// determinant by the product of the scales.
struct ScaledRows {
    std::vector<std::vector<Int>> m;
    Int scale_product = 1;
};

inline ScaledRows clear_denominators(const QMatrix& M) {
    ScaledRows out;
    out.m.assign(M.rows(), std::vector<Int>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < M.cols(); ++j)
            l = lcm(l, den(M.at(i, j)));
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const Rat& v = M.at(i, j);
            out.m[i][j] = num(v) * (l / den(v));
        }
        out.scale_product *= l;
    }
    return out;
}

struct Echelon {
    std::vector<std::vector<Int>> m;                      // echelon rows
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    int swap_sign = 1;
    Int last_pivot = 1;
};

// Fraction-free row reduction. Skipped columns are free columns; division by
// the previous pivot is exact because every entry is a minor of the input.
inline Echelon bareiss(std::vector<std::vector<Int>> m, std::size_t cols) {
    Echelon e;
    Int prev = 1;
    std::size_t pr = 0;
    const std::size_t rows = m.size();
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t r = pr; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            if (best == rows || abs(m[r][c]) > abs(m[best][c])) best = r;
        }
        if (best == rows) continue;
        if (best != pr) {
            std::swap(m[best], m[pr]);
            e.swap_sign = -e.swap_sign;
        }
        const Int piv = m[pr][c];
        for (std::size_t i = pr + 1; i < rows; ++i) {
            // Uniform update keeps every entry an exact minor of the input,
            // which is what makes the division by the previous pivot exact;
            // skipping "already zero" rows would corrupt that invariant.
            const Int lead = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * piv - lead * m[pr][j]) / prev;
            m[i][c] = 0;
        }
        prev = piv;
        e.pivots.emplace_back(pr, c);
        ++pr;
    }
    e.last_pivot = prev;
    e.m = std::move(m);
    return e;
}

}  // namespace detail

inline std::size_t rank(const QMatrix& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    auto scaled = detail::clear_denominators(M);
    return detail::bareiss(std::move(scaled.m), M.cols()).pivots.size();
}

// Determinant of a square matrix; the 0x0 determinant is 1.
inline Rat determinant(const QMatrix& M) {
    if (M.rows() != M.cols()) throw NotSquare("determinant of non-square matrix");
    if (M.rows() == 0) return 1;
    auto scaled = detail::clear_denominators(M);
    auto e = detail::bareiss(std::move(scaled.m), M.cols());
    if (e.pivots.size() < M.rows()) return 0;
    return Rat(e.swap_sign * e.last_pivot) / Rat(scaled.scale_product);
}

// Basis of the right kernel, one vector per free column in ascending column
// order, each normalized so its first nonzero coordinate is 1. A matrix with
// no rows has the full space as kernel; a matrix with no columns has none.
inline std::vector<std::vector<Rat>> kernel_basis(const QMatrix& M) {
    const std::size_t n = M.cols();
    std::vector<std::vector<Rat>> basis;
    if (n == 0) return basis;

    auto scaled = detail::clear_denominators(M);
    auto e = detail::bareiss(std::move(scaled.m), n);

    std::vector<bool> is_pivot_col(n, false);
    for (auto& [r, c] : e.pivots) is_pivot_col[c] = true;

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            auto [pr, pc] = e.pivots[k];
            Rat s = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (v[j] != 0) s += Rat(e.m[pr][j]) * v[j];
            v[pc] = -s / Rat(e.m[pr][pc]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] != 0) {
                const Rat lead = v[j];
                for (std::size_t k = j; k < n; ++k) v[k] /= lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline QMatrix hadamard(const QMatrix& A, const QMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw ShapeMismatch("hadamard product of unequal shapes");
    QMatrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            C.at(i, j) = A.at(i, j) * B.at(i, j);
    return C;
}

// Determinant of the submatrix picked out by the given row and column
// indices, taken in the order listed.
inline Rat minor_det(const QMatrix& M, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw NotSquareSelection("minor needs equally many rows and columns");
    for (std::size_t r : rows)
        if (r >= M.rows()) throw IndexOutOfRange("minor row index");
    for (std::size_t c : cols)
        if (c >= M.cols()) throw IndexOutOfRange("minor column index");
    QMatrix S(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            S.at(i, j) = M.at(rows[i], cols[j]);
    return determinant(S);
}

}  // namespace arrexp
