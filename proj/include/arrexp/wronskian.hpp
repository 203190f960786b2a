#pragma once

// Wronski matrices of power functions t^{a_c} evaluated at t = 1: entry
// (r, c) is the r-th derivative, the falling factorial a_c(a_c-1)...(a_c-r+1).
// The square determinant has a closed product form over strictly descending
// tuples; the direct determinant works for any tuple and serves as the
// independent check of sign and value.

#include <cstddef>
#include <vector>

#include "arrexp/errors.hpp"
#include "arrexp/numeric.hpp"
#include "arrexp/qmatrix.hpp"
#include "arrexp/tuples.hpp"

namespace arrexp {

struct WronskiMatrix {
    std::size_t rows = 0;
    NNTuple tuple;
    std::vector<Int> ents;  // row-major, rows x tuple.size()

    std::size_t cols() const { return tuple.size(); }
    const Int& entry(std::size_t r, std::size_t c) const {
        if (r >= rows || c >= cols()) throw IndexOutOfRange("wronski entry");
        return ents[r * cols() + c];
    }
    QMatrix to_qmatrix() const {
        QMatrix M(rows, cols());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols(); ++c)
                M.at(r, c) = Rat(ents[r * cols() + c]);
        return M;
    }
};

inline WronskiMatrix wronski_matrix(long long k, const NNTuple& a) {
    if (k < 1) throw BadRange("wronski matrix needs at least one row");
    if (a.empty()) throw BadRange("wronski matrix needs a nonempty tuple");
    WronskiMatrix W;
    W.rows = static_cast<std::size_t>(k);
    W.tuple = a;
    W.ents.reserve(W.rows * a.size());
    for (long long r = 0; r < k; ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            W.ents.push_back(falling_factorial(a[c], r));
    return W;
}

// Determinant of the square Wronski matrix, computed by elimination. Valid
// for any tuple; repeated entries give duplicate columns and hence zero.
inline Int wronskian_direct(const NNTuple& a) {
    if (a.empty()) return 1;
    Rat d = determinant(wronski_matrix(static_cast<long long>(a.size()), a).to_qmatrix());
    return num(d);
}

// Closed form for strictly descending a = (a_n, ..., a_0):
//   (-1)^floor((n+1)/2) * prod_{i<j} (a_j - a_i)
// with the product over positive differences, so the result matches the
// direct determinant in sign, not just in absolute value.
inline Int wronskian_closed(const NNTuple& a) {
    if (a.empty() || !a.is_strictly_descending())
        throw NotDescending("closed wronskian needs a strictly descending tuple");
    Int prod = 1;
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q)
            prod *= Int(a[p] - a[q]);
    if ((a.size() / 2) % 2 == 1) prod = -prod;
    return prod;
}

}  // namespace arrexp
