#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bkg/numeric.hpp"

namespace bkg {

/// Ambient group for sum counting: the integers, or Z_m.
struct GroupSpec {
    enum class Kind { integers, cyclic };
    Kind kind = Kind::integers;
    u64 modulus = 0;

    static GroupSpec integers() { return {Kind::integers, 0}; }
    static GroupSpec cyclic(u64 m);
    bool is_cyclic() const { return kind == Kind::cyclic; }
    bool operator==(const GroupSpec&) const = default;
};

/// A finite set of group elements with declared (k, g) parameters.
/// Elements are kept sorted and distinct; cyclic residues lie in [0, m).
struct CandidateSet {
    std::vector<i64> elements;
    unsigned k = 2;
    u64 g = 1;
    GroupSpec group;

    CandidateSet(std::vector<i64> elements, unsigned k, u64 g,
                 GroupSpec group = GroupSpec::integers());
};

/// Exact map from attainable k-fold multiset sums to their counts.
struct SumProfile {
    std::map<i64, u64> counts;
    u64 max_count = 0;
    std::vector<i64> argmax_sums;
    u64 total = 0;  // == C(|A|+k-1, k)
};

inline constexpr u64 kDefaultMultisetCap = 100'000'000;

/// Counts every size-k multiset sum of A by dynamic programming over the
/// sorted elements (each element used with multiplicity 0..k). Exact integer
/// arithmetic; dense tables when the sum range is small, hash maps otherwise.
SumProfile sum_profile(const CandidateSet& a, u64 cap = kDefaultMultisetCap);

/// Least g' such that A is a B_k[g'] set: the maximum multiset-sum count.
/// 0 for the empty set, 1 for singletons.
u64 min_g(const CandidateSet& a, u64 cap = kDefaultMultisetCap);

bool is_bkg(const CandidateSet& a, u64 cap = kDefaultMultisetCap);

/// Counts two-sided representations c = sum(M1) - sum(M2) over pairs of
/// disjoint multisets with |M1| = ceil(k/2), |M2| = floor(k/2), unordered
/// within each block. Disjointness removes the degenerate representations
/// obtained by repeating an element on both sides; with it, a B_k[1] set
/// attains every value at most once. Integer group only.
SumProfile difference_profile(const CandidateSet& a, u64 cap = kDefaultMultisetCap);

}  // namespace bkg
