#pragma once

// Bounded exhaustive search reports and a range-partitioned parallel driver.

#include "eisen/integer.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace eisen {

struct SearchReport {
    std::string target;
    std::int64_t bound = 0;
    std::vector<std::pair<std::string, bool>> constraints;
    std::uint64_t candidates_tested = 0;
    std::vector<std::string> fields;         // names of the values in each hit
    std::vector<std::vector<Integer>> hits;  // canonical order
    std::int64_t elapsed_ms = 0;
};

/// Nonzero integers in [-bound, bound], by magnitude, negative first:
/// -1, 1, -2, 2, ...
inline std::vector<std::int64_t> magnitude_order(std::int64_t bound, bool include_zero = false) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(2 * std::max<std::int64_t>(bound, 0) + 1));
    if (include_zero) out.push_back(0);
    for (std::int64_t k = 1; k <= bound; ++k) {
        out.push_back(-k);
        out.push_back(k);
    }
    return out;
}

/// Orders hits by their first `key_len` values, each compared as
/// (|v|, v) so that it matches magnitude_order.
inline void sort_hits(std::vector<std::vector<Integer>>& hits, std::size_t key_len) {
    std::stable_sort(hits.begin(), hits.end(), [key_len](const auto& x, const auto& y) {
        for (std::size_t i = 0; i < key_len && i < x.size() && i < y.size(); ++i) {
            const int c = cmp_abs(x[i], y[i]);
            if (c != 0) return c < 0;
            if (x[i] != y[i]) return x[i] < y[i];
        }
        return false;
    });
}

struct SearchShard {
    std::uint64_t tested = 0;
    std::vector<std::vector<Integer>> hits;
};

/// Runs `body(outer_value, shard)` for every value of `outer` split into
/// `jobs` contiguous chunks, then merges the shards. The merged hit list
/// is re-sorted on `key_len` values so it does not depend on `jobs`.
template <class Body>
void run_partitioned(SearchReport& report, const std::vector<std::int64_t>& outer, unsigned jobs,
                     std::size_t key_len, Body body) {
    const auto start = std::chrono::steady_clock::now();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(outer.size(), 1))));
    std::vector<SearchShard> shards(jobs);
    auto work = [&](unsigned shard_index) {
        const std::size_t lo = outer.size() * shard_index / jobs;
        const std::size_t hi = outer.size() * (shard_index + 1) / jobs;
        for (std::size_t i = lo; i < hi; ++i) body(outer[i], shards[shard_index]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(work, j);
    }
    for (auto& shard : shards) {
        report.candidates_tested += shard.tested;
        for (auto& hit : shard.hits) report.hits.push_back(std::move(hit));
    }
    sort_hits(report.hits, key_len);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
}

}  // namespace eisen
