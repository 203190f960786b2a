#pragma once

// Exponent sweeps over a box of multiplicity vectors on a fixed line set.
// Vectors are enumerated in lexicographic order and records are emitted in
// that order no matter how many workers computed them: the filtered vector
// list is fixed up front and workers fill preallocated slots by index.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "arrexp/core_model.hpp"
#include "arrexp/errors.hpp"
#include "arrexp/exponents.hpp"

namespace arrexp {

struct SweepConfig {
    std::vector<LineForm> lines;
    long long min_mult = 1;
    long long max_mult = 1;
    bool balanced_only = false;
    bool even_size_only = false;
    int workers = 1;
};

struct SweepRecord {
    std::vector<long long> mults;
    long long d1 = 0, d2 = 0, delta = 0;
    Method method = Method::WYKernelSearch;
    long long ms = 0;  // wall time of this record's computation
};

inline std::vector<SweepRecord> sweep(const SweepConfig& cfg) {
    if (cfg.lines.empty()) throw InvalidConfig("sweep needs at least one line");
    if (cfg.min_mult < 1) throw InvalidConfig("multiplicities start at 1");
    if (cfg.max_mult < cfg.min_mult) throw InvalidConfig("empty multiplicity range");
    if (cfg.workers < 1) throw InvalidConfig("worker count must be at least 1");
    std::vector<LineForm> lines;
    lines.reserve(cfg.lines.size());
    for (const LineForm& f : cfg.lines) lines.push_back(LineForm::normalized(f.a, f.b));
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i] == lines[j]) throw DuplicateLine(lines[i].pretty());

    const std::size_t n = lines.size();
    std::vector<std::vector<long long>> grid;
    std::vector<long long> m(n, cfg.min_mult);
    // lexicographic odometer, last coordinate fastest
    auto advance = [&]() {
        std::size_t i = n;
        while (i-- > 0) {
            if (m[i] < cfg.max_mult) {
                ++m[i];
                for (std::size_t j = i + 1; j < n; ++j) m[j] = cfg.min_mult;
                return true;
            }
        }
        return false;
    };
    do {
        long long total = 0;
        for (long long v : m) total += v;
        bool keep = !(cfg.even_size_only && total % 2 != 0);
        if (keep && cfg.balanced_only)
            for (long long v : m)
                if (2 * v >= total) {
                    keep = false;
                    break;
                }
        if (keep) grid.push_back(m);
    } while (advance());

    std::vector<SweepRecord> records(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            const auto t0 = std::chrono::steady_clock::now();
            Multiarrangement A;
            A.lines = lines;
            A.mults = grid[i];
            ExponentResult r = exponents(A);
            const auto t1 = std::chrono::steady_clock::now();
            records[i] = SweepRecord{
                grid[i], r.pair.d1, r.pair.d2, r.pair.delta(), r.method,
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()};
        }
    };
    if (cfg.workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return records;
}

// Every pair of emitted records whose multiplicity vectors differ by one in
// a single coordinate must differ by exactly one in delta. Returns the
// verdict and the number of adjacent pairs inspected.
inline std::pair<bool, long long> check_delta_steps(const std::vector<SweepRecord>& records) {
    std::map<std::vector<long long>, long long> delta_of;
    for (const SweepRecord& r : records) delta_of[r.mults] = r.delta;
    long long pairs = 0;
    for (const SweepRecord& r : records) {
        std::vector<long long> up = r.mults;
        for (std::size_t i = 0; i < up.size(); ++i) {
            ++up[i];
            auto it = delta_of.find(up);
            if (it != delta_of.end()) {
                ++pairs;
                const long long d = it->second - r.delta;
                if (d != 1 && d != -1) return {false, pairs};
            }
            --up[i];
        }
    }
    return {true, pairs};
}

inline void write_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                      std::size_t n_lines) {
    for (std::size_t i = 1; i <= n_lines; ++i) out << "m" << i << ",";
    out << "d1,d2,delta,method,ms\n";
    for (const SweepRecord& r : records) {
        for (long long v : r.mults) out << v << ",";
        out << r.d1 << "," << r.d2 << "," << r.delta << "," << method_name(r.method)
            << "," << r.ms << "\n";
    }
}

inline void write_jsonl(std::ostream& out, const std::vector<SweepRecord>& records) {
    for (const SweepRecord& r : records) {
        out << "{\"mults\":[";
        for (std::size_t i = 0; i < r.mults.size(); ++i)
            out << (i ? "," : "") << r.mults[i];
        out << "],\"d1\":" << r.d1 << ",\"d2\":" << r.d2 << ",\"delta\":" << r.delta
            << ",\"method\":\"" << method_name(r.method) << "\",\"ms\":" << r.ms
            << "}\n";
    }
}

}  // namespace arrexp
