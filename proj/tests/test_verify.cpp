#include <doctest.h>

#include <map>
#include <random>

#include "bkg/errors.hpp"
#include "bkg/verify.hpp"

using namespace bkg;

namespace {

// Naive oracle: enumerate every non-decreasing k-tuple recursively.
void enumerate_tuples(const std::vector<i64>& elems, unsigned k, size_t from,
                      i64 sum, const GroupSpec& group, std::map<i64, u64>& out) {
    if (k == 0) {
        i64 key = group.is_cyclic() ? ((sum % i64(group.modulus)) + i64(group.modulus)) %
                                          i64(group.modulus)
                                    : sum;
        ++out[key];
        return;
    }
    for (size_t i = from; i < elems.size(); ++i) {
        enumerate_tuples(elems, k - 1, i, sum + elems[i], group, out);
    }
}

std::map<i64, u64> oracle_profile(const std::vector<i64>& elems, unsigned k,
                                  const GroupSpec& group) {
    std::map<i64, u64> out;
    enumerate_tuples(elems, k, 0, 0, group, out);
    return out;
}

CandidateSet make(std::vector<i64> elems, unsigned k, u64 g,
                  GroupSpec group = GroupSpec::integers()) {
    return CandidateSet(std::move(elems), k, g, group);
}

}  // namespace

TEST_CASE("sum_profile frozen examples") {
    auto p1 = sum_profile(make({1}, 2, 1));
    CHECK(p1.counts == std::map<i64, u64>{{2, 1}});

    auto p2 = sum_profile(make({1, 2}, 2, 1));
    CHECK(p2.counts == std::map<i64, u64>{{2, 1}, {3, 1}, {4, 1}});

    auto p3 = sum_profile(make({1, 2, 3}, 2, 1));
    CHECK(p3.counts == std::map<i64, u64>{{2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 1}});
    CHECK(p3.max_count == 2);
    CHECK(p3.argmax_sums == std::vector<i64>{4});
    CHECK(p3.total == 6);
}

TEST_CASE("profile mass equals the multiset count") {
    auto p = sum_profile(make({1, 4, 9, 11, 20}, 3, 1));
    CHECK(p.total == multiset_count(5, 3));
}

TEST_CASE("DP agrees with naive enumeration on random sets") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        unsigned k = 2 + trial % 4;
        size_t size = 1 + rng() % 9;
        std::uniform_int_distribution<i64> val(-30, 60);
        std::vector<i64> elems;
        while (elems.size() < size) {
            i64 v = val(rng);
            if (std::find(elems.begin(), elems.end(), v) == elems.end()) {
                elems.push_back(v);
            }
        }
        std::sort(elems.begin(), elems.end());

        GroupSpec group = (trial % 3 == 0) ? GroupSpec::cyclic(2 + rng() % 97)
                                           : GroupSpec::integers();
        if (group.is_cyclic()) {
            // residues must live in [0, m)
            for (auto& e : elems) e = ((e % i64(group.modulus)) + i64(group.modulus)) %
                                      i64(group.modulus);
            std::sort(elems.begin(), elems.end());
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        }
        CAPTURE(k);
        CAPTURE(group.modulus);
        auto profile = sum_profile(make(elems, k, 1, group));
        CHECK(profile.counts == oracle_profile(elems, k, group));
    }
}

TEST_CASE("min_g conventions and small cases") {
    CHECK(min_g(make({}, 2, 1)) == 0);
    CHECK(min_g(make({7}, 2, 1)) == 1);
    CHECK(min_g(make({7}, 5, 1)) == 1);
    CHECK(min_g(make({1, 2, 3}, 2, 1)) == 2);
    CHECK(min_g(make({1, 2, 5, 7}, 2, 1)) == 1);  // Sidon
}

TEST_CASE("is_bkg") {
    CHECK(is_bkg(make({1, 2, 5, 7}, 2, 1)));
    CHECK_FALSE(is_bkg(make({1, 2, 3}, 2, 1)));
    CHECK(is_bkg(make({1, 2, 3}, 2, 2)));
    CHECK(is_bkg(make({}, 2, 1)));
}

TEST_CASE("min_g is monotone under taking subsets") {
    std::vector<i64> base{1, 2, 5, 11, 19, 24, 26};
    u64 full = min_g(make(base, 3, 1));
    for (size_t drop = 0; drop < base.size(); ++drop) {
        std::vector<i64> sub;
        for (size_t i = 0; i < base.size(); ++i) {
            if (i != drop) sub.push_back(base[i]);
        }
        CHECK(min_g(make(sub, 3, 1)) <= full);
    }
}

TEST_CASE("translation leaves min_g unchanged (integer group)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<i64> elems;
        size_t size = 2 + rng() % 7;
        while (elems.size() < size) {
            i64 v = i64(rng() % 80);
            if (std::find(elems.begin(), elems.end(), v) == elems.end()) {
                elems.push_back(v);
            }
        }
        std::sort(elems.begin(), elems.end());
        unsigned k = 2 + trial % 3;
        u64 reference = min_g(make(elems, k, 1));
        for (i64 c : {i64(-17), i64(1), i64(40)}) {
            std::vector<i64> shifted;
            for (i64 e : elems) shifted.push_back(e + c);
            CHECK(min_g(make(shifted, k, 1)) == reference);
        }
    }
}

TEST_CASE("unit dilation leaves min_g unchanged (cyclic group)") {
    std::mt19937_64 rng(11);
    const u64 m = 24;
    std::vector<i64> elems{1, 3, 16, 17, 20};
    unsigned k = 2;
    u64 reference = min_g(make(elems, k, 1, GroupSpec::cyclic(m)));
    for (u64 c : {5ull, 7ull, 11ull, 13ull, 23ull}) {  // units mod 24
        std::vector<i64> mapped;
        for (i64 e : elems) mapped.push_back(i64(u64(e) * c % m));
        std::sort(mapped.begin(), mapped.end());
        CHECK(min_g(make(mapped, k, 1, GroupSpec::cyclic(m))) == reference);
    }
    (void)rng;
}

TEST_CASE("integer reading never collides more than the cyclic one") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const u64 m = 20 + rng() % 60;
        std::vector<i64> elems;
        size_t size = 3 + rng() % 6;
        while (elems.size() < size) {
            i64 v = i64(rng() % m);
            if (std::find(elems.begin(), elems.end(), v) == elems.end()) {
                elems.push_back(v);
            }
        }
        std::sort(elems.begin(), elems.end());
        unsigned k = 2 + trial % 3;
        u64 cyclic = min_g(make(elems, k, 1, GroupSpec::cyclic(m)));
        u64 integer = min_g(make(elems, k, 1));
        CHECK(integer <= cyclic);
    }
}

TEST_CASE("sparse fallback agrees with the dense path") {
    // huge cyclic modulus forces the hash-map path
    const u64 big_m = u64(1) << 40;
    std::vector<i64> residues{3, 9, 1000000007, 88888888888, 2200000000000};
    auto sparse = sum_profile(make(residues, 3, 1, GroupSpec::cyclic(big_m)));
    CHECK(sparse.total == multiset_count(5, 3));
    CHECK(sparse.counts == oracle_profile(residues, 3, GroupSpec::cyclic(big_m)));

    // wide integer range does the same
    std::vector<i64> wide{-4000000000, 17, 5000000000, 9999999999};
    auto sparse_int = sum_profile(make(wide, 2, 1));
    CHECK(sparse_int.counts == oracle_profile(wide, 2, GroupSpec::integers()));

    // identical small instance through both paths
    std::vector<i64> probe{0, 1, 7, 30};
    auto dense = sum_profile(make(probe, 3, 1, GroupSpec::cyclic(97)));
    std::vector<i64> spread;  // same residues, modulus too big for the table
    for (i64 e : probe) spread.push_back(e);
    auto remapped = oracle_profile(spread, 3, GroupSpec::cyclic(97));
    CHECK(dense.counts == remapped);
}

TEST_CASE("cap raises with the offending count") {
    std::vector<i64> big;
    for (i64 i = 0; i < 60; ++i) big.push_back(i);
    try {
        sum_profile(make(big, 8, 1), 1000);
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        CHECK(e.count == multiset_count(60, 8));
    }
}

TEST_CASE("difference_profile counts disjoint two-sided representations") {
    // Sidon set: every nonzero difference once; no disjoint pair reaches 0
    auto sidon = difference_profile(make({1, 2, 5, 7}, 2, 1));
    CHECK(sidon.max_count == 1);
    CHECK(sidon.counts.size() == 12);  // the 12 ordered nonzero differences
    CHECK(sidon.counts.count(0) == 0);

    // value 1 is attained twice: (2|1) and (3|2)
    auto tri = difference_profile(make({1, 2, 3}, 2, 1));
    CHECK(tri.counts.at(1) == 2);
    CHECK(tri.max_count == 2);

    // blocks of sizes 2 and 1 from {1,2,5}: e.g. value 6 only via (2+5|1)
    auto mixed = difference_profile(make({1, 2, 5}, 3, 1));
    CHECK(mixed.counts.at(6) == 1);
    CHECK(mixed.counts.at(-3) == 1);  // (1+1|5)
}

TEST_CASE("difference_profile max count is 1 on B_k[1] sets") {
    // {1,2,8} attains all 15 triple sums distinctly, so it is B_4[1]-free of
    // collisions; its two-sided representations must then be unique.
    CHECK(min_g(make({1, 2, 8}, 4, 1)) == 1);
    auto profile = difference_profile(make({1, 2, 8}, 4, 1));
    CHECK(profile.max_count == 1);

    CHECK(min_g(make({1, 2, 5, 7}, 2, 1)) == 1);
    CHECK(difference_profile(make({1, 2, 5, 7}, 2, 1)).max_count == 1);
}

TEST_CASE("difference_profile rejects cyclic groups") {
    CHECK_THROWS_AS(
        difference_profile(make({1, 2}, 2, 1, GroupSpec::cyclic(10))),
        InvalidInputError);
}

TEST_CASE("CandidateSet validation") {
    CHECK_THROWS_AS(make({1, 1, 2}, 2, 1), InvalidInputError);
    CHECK_THROWS_AS(make({1, 2}, 1, 1), InvalidInputError);
    CHECK_THROWS_AS(make({1, 2}, 2, 0), InvalidInputError);
    CHECK_THROWS_AS(make({-1, 2}, 2, 1, GroupSpec::cyclic(10)), InvalidInputError);
    CHECK_THROWS_AS(make({1, 12}, 2, 1, GroupSpec::cyclic(10)), InvalidInputError);
    CHECK_NOTHROW(make({5, 2, 9}, 2, 1));  // sorted on construction
}
