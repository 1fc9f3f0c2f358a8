#include "bkg/verify.hpp"

#include <algorithm>
#include <unordered_map>

#include "bkg/errors.hpp"

namespace bkg {

namespace {

// Dense DP is used when the span of attainable partial sums fits this many
// slots; beyond it the hash-map path takes over.
constexpr u64 kDenseWidthLimit = 10'000'000;

struct DenseTables {
    i64 offset = 0;  // value represented by slot 0
    u64 width = 0;
    std::vector<std::vector<u64>> slots;  // [j][value - offset]
};

SumProfile finalize(std::map<i64, u64> counts, u64 expected_total) {
    SumProfile profile;
    profile.counts = std::move(counts);
    u128 running = 0;
    for (const auto& [sum, count] : profile.counts) {
        running += count;
        if (count > profile.max_count) {
            profile.max_count = count;
            profile.argmax_sums.clear();
        }
        if (count == profile.max_count) profile.argmax_sums.push_back(sum);
    }
    if (running != expected_total) {
        throw InternalError("sum profile mass does not match the multiset count");
    }
    profile.total = expected_total;
    return profile;
}

u64 checked_multiset_total(size_t set_size, unsigned k, u64 cap) {
    u64 total = multiset_count(set_size, k);
    if (total > cap) {
        throw CapExceededError("multiset count exceeds the configured cap", total);
    }
    return total;
}

}  // namespace

GroupSpec GroupSpec::cyclic(u64 m) {
    if (m < 2) throw InvalidInputError("cyclic modulus must be >= 2");
    return {Kind::cyclic, m};
}

CandidateSet::CandidateSet(std::vector<i64> elems, unsigned k_in, u64 g_in,
                           GroupSpec group_in)
    : elements(std::move(elems)), k(k_in), g(g_in), group(group_in) {
    if (k < 2) throw InvalidInputError("k must be >= 2");
    if (g < 1) throw InvalidInputError("g must be >= 1");
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        throw InvalidInputError("set elements must be distinct");
    }
    if (group.is_cyclic()) {
        if (group.modulus > u64(INT64_MAX)) {
            throw InvalidInputError("cyclic modulus too large");
        }
        for (i64 e : elements) {
            if (e < 0 || u64(e) >= group.modulus) {
                throw InvalidInputError("cyclic residue out of [0, m)");
            }
        }
    }
}

SumProfile sum_profile(const CandidateSet& a, u64 cap) {
    const unsigned k = a.k;
    const u64 expected = checked_multiset_total(a.elements.size(), k, cap);
    if (a.elements.empty()) return finalize({}, 0);

    const bool cyclic = a.group.is_cyclic();
    const u64 m = a.group.modulus;

    // Dense slot range covering every partial sum of 0..k addends.
    i64 lo = 0;
    u64 width = 0;
    if (cyclic) {
        width = m;
    } else {
        i128 lo128 = std::min<i128>(0, i128(k) * a.elements.front());
        i128 hi128 = std::max<i128>(0, i128(k) * a.elements.back());
        if (lo128 < -(i128(1) << 62) || hi128 > (i128(1) << 62)) {
            throw OverflowError("k-fold sums exceed the native integer range");
        }
        lo = i64(lo128);
        u128 span = u128(hi128 - lo128) + 1;
        width = span > kDenseWidthLimit ? kDenseWidthLimit + 1 : u64(span);
    }

    std::map<i64, u64> counts;
    if (width <= kDenseWidthLimit) {
        const i64 offset = cyclic ? 0 : lo;
        std::vector<std::vector<u64>> dp(k + 1, std::vector<u64>(width, 0));
        dp[0][u64(-offset)] = 1;
        for (i64 e : a.elements) {
            // dp[j-1] already reflects this element, so multiplicities > 1
            // accumulate through the ascending-j pass.
            for (unsigned j = 1; j <= k; ++j) {
                const auto& prev = dp[j - 1];
                auto& cur = dp[j];
                if (cyclic) {
                    for (u64 s = 0; s < width; ++s) {
                        if (prev[s]) {
                            u64 t = s + u64(e);
                            if (t >= m) t -= m;
                            cur[t] += prev[s];
                        }
                    }
                } else {
                    for (u64 s = 0; s < width; ++s) {
                        if (prev[s]) cur[u64(i64(s) + e)] += prev[s];
                    }
                }
            }
        }
        for (u64 s = 0; s < width; ++s) {
            if (dp[k][s]) counts.emplace(offset + i64(s), dp[k][s]);
        }
    } else {
        std::vector<std::unordered_map<i64, u64>> dp(k + 1);
        dp[0][0] = 1;
        for (i64 e : a.elements) {
            for (unsigned j = 1; j <= k; ++j) {
                for (const auto& [s, c] : dp[j - 1]) {
                    i64 t = s + e;
                    if (cyclic) t %= i64(m);
                    dp[j][t] += c;
                }
            }
        }
        counts.insert(dp[k].begin(), dp[k].end());
    }
    return finalize(std::move(counts), expected);
}

u64 min_g(const CandidateSet& a, u64 cap) {
    if (a.elements.empty()) return 0;
    return sum_profile(a, cap).max_count;
}

bool is_bkg(const CandidateSet& a, u64 cap) { return min_g(a, cap) <= a.g; }

SumProfile difference_profile(const CandidateSet& a, u64 cap) {
    if (a.group.is_cyclic()) {
        throw InvalidInputError("difference_profile is defined over the integers");
    }
    const unsigned s1 = (a.k + 1) / 2;
    const unsigned s2 = a.k / 2;
    const u64 pairs_bound =
        checked_mul(multiset_count(a.elements.size(), s1),
                    std::max<u64>(1, multiset_count(a.elements.size(), s2)))
            .value_or(UINT64_MAX);
    if (pairs_bound > cap) {
        throw CapExceededError("two-sided representation count exceeds the cap",
                               pairs_bound);
    }

    // state[j1][j2]: value -> count over pairs of disjoint multisets of sizes
    // (j1, j2). Per element the multiplicity goes entirely to one block.
    using Layer = std::map<i64, u64>;
    std::vector<std::vector<Layer>> state(s1 + 1, std::vector<Layer>(s2 + 1));
    state[0][0][0] = 1;
    for (i64 e : a.elements) {
        auto old = state;
        for (unsigned j1 = 0; j1 <= s1; ++j1) {
            for (unsigned j2 = 0; j2 <= s2; ++j2) {
                for (const auto& [v, c] : old[j1][j2]) {
                    for (unsigned t = 1; j1 + t <= s1; ++t) {
                        state[j1 + t][j2][v + i64(t) * e] += c;
                    }
                    for (unsigned t = 1; j2 + t <= s2; ++t) {
                        state[j1][j2 + t][v - i64(t) * e] += c;
                    }
                }
            }
        }
    }

    SumProfile profile;
    profile.counts = std::move(state[s1][s2]);
    for (const auto& [value, count] : profile.counts) {
        profile.total += count;
        if (count > profile.max_count) {
            profile.max_count = count;
            profile.argmax_sums.clear();
        }
        if (count == profile.max_count) profile.argmax_sums.push_back(value);
    }
    return profile;
}

}  // namespace bkg
