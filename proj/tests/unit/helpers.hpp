#pragma once

// Shared builders for the test suite.

#include "arrexp/arrexp.hpp"

#include <vector>

namespace testutil {

using namespace arrexp;

// x^m1 y^m2 (x-y)^m3 (x+y)^m4
inline Multiarrangement b2(long long m1, long long m2, long long m3, long long m4) {
    return normalize_arrangement({{1, 0}, {0, 1}, {1, -1}, {1, 1}}, {m1, m2, m3, m4});
}

// x^m1 y^m2 (x-y)^m3
inline Multiarrangement a2(long long m1, long long m2, long long m3) {
    return normalize_arrangement({{1, 0}, {0, 1}, {1, -1}}, {m1, m2, m3});
}

// x, y, then one line x - s y per slope
inline Multiarrangement with_slopes(const std::vector<long long>& slopes,
                                    const std::vector<long long>& mults) {
    std::vector<std::pair<Int, Int>> lines = {{1, 0}, {0, 1}};
    for (long long s : slopes) lines.push_back({Int(1), Int(-s)});
    return normalize_arrangement(lines, mults);
}

}  // namespace testutil
