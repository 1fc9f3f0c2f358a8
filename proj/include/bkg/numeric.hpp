#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bkg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

/// Distinct prime factors in ascending order, by trial division.
std::vector<u64> prime_factors(u64 n);

/// Largest r with r^k <= x, by integer binary search (no floating point).
u64 kth_root_floor(u64 x, unsigned k);

/// base^exp, or nullopt if the result does not fit in 64 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp);

std::optional<u64> checked_mul(u64 a, u64 b);
std::optional<u64> checked_add(u64 a, u64 b);

/// C(n, k), saturating at UINT64_MAX.
u64 binomial_saturated(u64 n, u64 k);

/// Number of size-k multisets from a set of the given size, saturating.
u64 multiset_count(u64 set_size, unsigned k);

/// k! saturating at UINT64_MAX (exact up to k = 20).
u64 factorial_saturated(unsigned k);

}  // namespace bkg
