#include "bkg/numeric.hpp"

#include "bkg/errors.hpp"

namespace bkg {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Witnesses proven sufficient for all n < 3.3e24, so for all 64-bit n.
constexpr u64 kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 b : kMillerRabinBases) {
        if (n % b == 0) return n == b;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 b : kMillerRabinBases) {
        u64 x = powmod(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    if (n == 0) throw InvalidInputError("prime_factors: n must be positive");
    std::vector<u64> factors;
    auto strip = [&](u64 p) {
        if (n % p == 0) {
            factors.push_back(p);
            while (n % p == 0) n /= p;
        }
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d <= n / d; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

namespace {

// r^k <= x without overflow: abort the product as soon as it exceeds x.
bool pow_leq(u64 r, unsigned k, u64 x) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= r;
        if (acc > x) return false;
    }
    return true;
}

}  // namespace

u64 kth_root_floor(u64 x, unsigned k) {
    if (k == 0) throw InvalidInputError("kth_root_floor: k must be >= 1");
    if (k == 1 || x <= 1) return x;
    u64 lo = 1, hi = 2;
    while (pow_leq(hi, k, x)) {
        lo = hi;
        if (hi > UINT64_MAX / 2) break;
        hi *= 2;
    }
    // invariant: lo^k <= x < hi^k
    while (lo + 1 < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (pow_leq(mid, k, x)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u128 acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > UINT64_MAX) return std::nullopt;
    }
    return static_cast<u64>(acc);
}

std::optional<u64> checked_mul(u64 a, u64 b) {
    u128 p = u128(a) * b;
    if (p > UINT64_MAX) return std::nullopt;
    return static_cast<u64>(p);
}

std::optional<u64> checked_add(u64 a, u64 b) {
    if (a > UINT64_MAX - b) return std::nullopt;
    return a + b;
}

u64 binomial_saturated(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u128 c = 1;
    for (u64 i = 1; i <= k; ++i) {
        if (c > UINT64_MAX) return UINT64_MAX;
        c = c * (n - k + i) / i;  // exact at every step
    }
    return c > UINT64_MAX ? UINT64_MAX : static_cast<u64>(c);
}

u64 multiset_count(u64 set_size, unsigned k) {
    if (set_size == 0) return 0;
    if (set_size > UINT64_MAX - k) return UINT64_MAX;
    return binomial_saturated(set_size + k - 1, k);
}

u64 factorial_saturated(unsigned k) {
    u128 f = 1;
    for (unsigned i = 2; i <= k; ++i) {
        f *= i;
        if (f > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<u64>(f);
}

}  // namespace bkg
