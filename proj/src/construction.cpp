#include "bkg/construction.hpp"

#include <algorithm>

#include "bkg/errors.hpp"

namespace bkg {

BoseChowlaSet bose_chowla(u64 q, unsigned k) {
    return bose_chowla(FieldContext(q, k));
}

BoseChowlaSet bose_chowla(const FieldContext& ctx) {
    BoseChowlaSet set;
    set.q = ctx.p();
    set.k = ctx.degree();
    set.modulus = ctx.group_order();

    // Single sweep over theta^a, maintained by one multiplication per step.
    // a = 0 would require 1 - theta to be a base-field element, impossible
    // for degree >= 2, so the sweep starts at 1.
    const ExtElem& theta = ctx.theta();
    ExtElem power = theta;
    for (u64 a = 1; a <= set.modulus - 1; ++a) {
        if (in_base_field(ctx.sub(power, theta))) set.elements.push_back(a);
        power = ctx.mul(power, theta);
    }
    if (set.elements.size() != set.q) {
        throw InternalError("Bose-Chowla sweep did not yield exactly q elements");
    }
    return set;
}

std::vector<u64> subgroup_elements(u64 q, unsigned k, u64 g) {
    if (g == 0 || (q - 1) % g != 0) {
        throw InvalidInputError("g must divide q - 1");
    }
    auto qk = checked_pow(q, k);
    if (!qk || *qk > (u64(1) << 63)) {
        throw OverflowError("q^k - 1 >= 2^63 exceeds the supported range");
    }
    const u64 mu = (*qk - 1) / g;
    std::vector<u64> h(g);
    for (u64 s = 0; s < g; ++s) h[s] = s * mu;
    return h;
}

bool difference_avoids_subgroup(const BoseChowlaSet& a, const std::vector<u64>& h) {
    if (h.empty() || h.front() != 0 || a.modulus % h.size() != 0) {
        throw InvalidInputError("H must be the subgroup {0, mu, 2mu, ...}");
    }
    const u64 mu = a.modulus / h.size();
    for (u64 s = 0; s < h.size(); ++s) {
        if (h[s] != s * mu) {
            throw InvalidInputError("H must be the subgroup {0, mu, 2mu, ...}");
        }
    }
    // (A - A) meets H beyond 0 exactly when two distinct elements agree mod
    // mu: a - b == s*mu (mod q^k - 1) iff mu | a - b over the integers.
    std::vector<u64> residues(a.elements.size());
    for (size_t i = 0; i < a.elements.size(); ++i) residues[i] = a.elements[i] % mu;
    std::sort(residues.begin(), residues.end());
    return std::adjacent_find(residues.begin(), residues.end()) == residues.end();
}

QuotientSet quotient_set(const BoseChowlaSet& a, u64 g) {
    if (g == 0 || (a.q - 1) % g != 0) {
        throw InvalidInputError("g must divide q - 1");
    }
    QuotientSet out;
    out.q = a.q;
    out.k = a.k;
    out.g = g;
    out.mu = a.modulus / g;
    out.elements.reserve(a.elements.size());
    for (u64 e : a.elements) out.elements.push_back(e % out.mu);
    std::sort(out.elements.begin(), out.elements.end());
    if (std::adjacent_find(out.elements.begin(), out.elements.end()) !=
        out.elements.end()) {
        throw InternalError("quotient reduction collided; upstream field is broken");
    }
    return out;
}

std::optional<u64> select_prime(unsigned k, u64 g, u64 n) {
    if (k < 2 || g < 1 || n < 1) {
        throw InvalidInputError("need k >= 2, g >= 1, n >= 1");
    }
    // (q^k - 1)/g <= n  <=>  q^k <= g*n + 1, with q also inside the field cap.
    u128 gn = u128(g) * n + 1;
    u64 limit = gn > UINT64_MAX ? UINT64_MAX : u64(gn);
    u64 beta = kth_root_floor(limit, k);
    beta = std::min(beta, kth_root_floor(u64(1) << 63, k));
    beta = std::min(beta, (u64(1) << 31) - 1);
    for (u64 q = beta; q >= 2; --q) {
        if ((q - 1) % g == 0 && is_prime(q)) return q;
    }
    return std::nullopt;
}

CandidateSet ConstructionResult::as_candidate() const {
    return CandidateSet(elements, k, g, GroupSpec::integers());
}

ConstructionResult construct_bkg(unsigned k, u64 g, u64 n, u64 certify_cap) {
    auto q = select_prime(k, g, n);
    if (!q) {
        throw InfeasibleError("no prime q with q == 1 (mod g) and (q^k-1)/g <= n");
    }

    BoseChowlaSet base = bose_chowla(*q, k);
    if (!difference_avoids_subgroup(base, subgroup_elements(*q, k, g))) {
        throw InternalError("difference set meets the subgroup beyond 0");
    }
    QuotientSet quotient = quotient_set(base, g);

    ConstructionResult result;
    result.k = k;
    result.g = g;
    result.n = n;
    result.q = *q;
    result.mu = quotient.mu;
    result.elements.reserve(quotient.elements.size());
    for (u64 e : quotient.elements) result.elements.push_back(i64(e) + 1);
    if (u64(result.elements.back()) > n) {
        throw InternalError("embedded element exceeds n");
    }

    auto qk = checked_pow(*q, k);
    if (qk && *qk <= certify_cap) {
        result.certificate.attempted = true;
        SumProfile profile = sum_profile(result.as_candidate());
        result.certificate.achieved_min_g = profile.max_count;
        result.certificate.witness_sums = profile.argmax_sums;
        result.certificate.multiset_total = profile.total;
        result.certificate.verified = profile.max_count <= g;
        if (!result.certificate.verified) {
            throw InternalError("constructed set failed verification");
        }
        result.certificate.note = "verified";
    } else {
        result.certificate.note = "not verified (scale)";
    }
    return result;
}

}  // namespace bkg
