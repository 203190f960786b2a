#pragma once

// Tuples of nonnegative integers, written largest entry first. They name the
// column exponents of the coefficient matrices built later, so the helpers
// here mirror the operations those constructions need: descending ranges,
// concatenation, and the split into even and odd entries.

#include <string>
#include <utility>
#include <vector>

#include "arrexp/errors.hpp"

namespace arrexp {

struct NNTuple {
    std::vector<long long> entries;

    NNTuple() = default;
    explicit NNTuple(std::vector<long long> e) : entries(std::move(e)) {
        for (long long v : entries)
            if (v < 0) throw BadRange("tuple entries must be nonnegative");
    }
    NNTuple(std::initializer_list<long long> e)
        : NNTuple(std::vector<long long>(e)) {}

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    long long operator[](std::size_t i) const { return entries[i]; }

    bool is_strictly_descending() const {
        for (std::size_t i = 1; i < entries.size(); ++i)
            if (entries[i - 1] <= entries[i]) return false;
        return true;
    }

    bool operator==(const NNTuple& o) const { return entries == o.entries; }

    // Compact display: maximal runs that step down by one are written as
    // (hi:lo), isolated entries as (v), runs joined by the concatenation
    // symbol, e.g. (9,8,7,4) renders as "(9:7)⊕(4)".
    std::string notation() const {
        if (entries.empty()) return "()";
        std::string out;
        std::size_t i = 0;
        while (i < entries.size()) {
            std::size_t j = i;
            while (j + 1 < entries.size() && entries[j + 1] == entries[j] - 1) ++j;
            if (!out.empty()) out += "⊕";
            if (j > i)
                out += "(" + std::to_string(entries[i]) + ":" +
                       std::to_string(entries[j]) + ")";
            else
                out += "(" + std::to_string(entries[i]) + ")";
            i = j + 1;
        }
        return out;
    }
};

// (n2, n2-1, ..., n1); a single entry when n2 == n1.
inline NNTuple range_tuple(long long n2, long long n1) {
    if (n1 < 0 || n2 < n1) throw BadRange("range_tuple needs n2 >= n1 >= 0");
    std::vector<long long> e;
    e.reserve(static_cast<std::size_t>(n2 - n1 + 1));
    for (long long v = n2; v >= n1; --v) e.push_back(v);
    return NNTuple(std::move(e));
}

inline NNTuple concat(const NNTuple& a, const NNTuple& b) {
    std::vector<long long> e = a.entries;
    e.insert(e.end(), b.entries.begin(), b.entries.end());
    return NNTuple(std::move(e));
}

// Entries of even and odd value, each keeping the original order.
inline std::pair<NNTuple, NNTuple> even_odd_parts(const NNTuple& a) {
    std::vector<long long> ev, od;
    for (long long v : a.entries) (v % 2 == 0 ? ev : od).push_back(v);
    return {NNTuple(std::move(ev)), NNTuple(std::move(od))};
}

}  // namespace arrexp
