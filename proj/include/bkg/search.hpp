#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bkg/bounds.hpp"

namespace bkg {

/// Growing prefix of an increasing candidate set together with the running
/// multiset-sum counts for every size 0..k, kept consistent incrementally.
struct PartialState {
    std::vector<u32> chosen;
    // sum_counts[j][s] = number of size-j multisets from chosen with sum s.
    std::vector<std::vector<u64>> sum_counts;
};

struct SearchOptions {
    double time_limit_seconds = 0;  // 0 = no limit
    unsigned threads = 1;
    // Test hook, invoked on every stride-th expanded node (single-threaded
    // runs only). 0 disables.
    u64 node_hook_stride = 0;
    std::function<void(const PartialState&)> node_hook;
};

struct SearchResult {
    enum class Status { exact, timeout_lower_bound };

    ProblemSpec spec;
    Status status = Status::exact;
    std::vector<u32> best;  // a maximum-size witness (exact) or best found
    u64 nodes = 0;
    double seconds = 0;

    u64 size() const { return best.size(); }
    bool exact() const { return status == Status::exact; }
};

/// Scans 1..n, keeping each element whose addition leaves every k-fold
/// multiset-sum count at most g. Seeds the exact search.
std::vector<u32> greedy_set(const ProblemSpec& spec);

/// Exact maximum size of a B_k[g] subset of [1, n] by depth-first search over
/// increasing prefixes that contain 1 (translation leaves the counts
/// unchanged, so some maximum set contains 1). Prunes on remaining capacity
/// and on the exact counting bound applied to the translated suffix window.
/// Runs past the time limit are reported as lower bounds, never as exact.
SearchResult exact_max(const ProblemSpec& spec, const SearchOptions& options = {});

}  // namespace bkg
