#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkg/field.hpp"
#include "bkg/verify.hpp"

namespace bkg {

/// The set {a in Z_{q^k-1} : theta^a - theta lies in the base field}, of size
/// exactly q; every k-fold multiset sum in Z_{q^k-1} is attained at most once.
struct BoseChowlaSet {
    u64 q = 0;
    unsigned k = 0;
    u64 modulus = 0;  // q^k - 1
    std::vector<u64> elements;  // sorted residues in [0, modulus - 1]
};

BoseChowlaSet bose_chowla(u64 q, unsigned k);
BoseChowlaSet bose_chowla(const FieldContext& ctx);

/// {0, mu, 2mu, ..., (g-1)mu} with mu = (q^k - 1)/g; requires g | q - 1.
std::vector<u64> subgroup_elements(u64 q, unsigned k, u64 g);

/// True iff the difference set of A meets the subgroup H only in 0,
/// equivalently iff no two distinct elements of A agree modulo mu.
bool difference_avoids_subgroup(const BoseChowlaSet& a, const std::vector<u64>& h);

/// Image of a BoseChowlaSet in Z_mu, mu = (q^k-1)/g. The reduction is
/// injective, so the quotient keeps all q elements and attains every k-fold
/// sum at most g times.
struct QuotientSet {
    u64 q = 0;
    unsigned k = 0;
    u64 g = 1;
    u64 mu = 0;
    std::vector<u64> elements;  // sorted residues in [0, mu - 1]
};

QuotientSet quotient_set(const BoseChowlaSet& a, u64 g);

/// Largest prime q with q == 1 (mod g) and (q^k - 1)/g <= n, found by
/// downward enumeration from the exact integer k-th root of g*n + 1.
/// nullopt when no admissible prime >= 2 exists.
std::optional<u64> select_prime(unsigned k, u64 g, u64 n);

struct ConstructionCertificate {
    bool attempted = false;
    bool verified = false;
    u64 achieved_min_g = 0;
    std::vector<i64> witness_sums;  // sums attaining the maximum count
    u64 multiset_total = 0;
    std::string note;
};

struct ConstructionResult {
    unsigned k = 0;
    u64 g = 1;
    u64 n = 0;
    u64 q = 0;
    u64 mu = 0;
    std::vector<i64> elements;  // sorted integers in [1, n]
    ConstructionCertificate certificate;

    CandidateSet as_candidate() const;
};

inline constexpr u64 kDefaultCertifyCap = 1'000'000;

/// End-to-end pipeline: select_prime -> bose_chowla -> quotient_set -> shift
/// residues by +1 into [1, mu] (a translation preserves every multiset-sum
/// count). Certification runs only when q^k <= certify_cap.
ConstructionResult construct_bkg(unsigned k, u64 g, u64 n,
                                 u64 certify_cap = kDefaultCertifyCap);

}  // namespace bkg
