#include "bkg/field.hpp"

#include <algorithm>

#include "bkg/errors.hpp"

namespace bkg {

namespace {

// Dense polynomials over F_p for the irreducibility machinery, constant term
// first, no implied degree (leading zeros are stripped by normalize).
using Poly = std::vector<u64>;

void normalize(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 av = i < a.size() ? a[i] : 0;
        u64 bv = i < b.size() ? b[i] : 0;
        r[i] = (av + p - bv) % p;
    }
    normalize(r);
    return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, u64 p) {
    normalize(a);
    int dm = degree(m);
    while (degree(a) >= dm) {
        u64 c = a.back();
        int shift = degree(a) - dm;
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                u64 sub = c * m[i] % p;
                a[i + shift] = (a[i + shift] + p - sub) % p;
            }
        }
        normalize(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& m, u64 p) {
    Poly r = {1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

u64 inverse_mod_p(u64 a, u64 p) {
    // p prime; Fermat.
    u64 r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        // make b monic so poly_mod applies
        u64 inv = inverse_mod_p(b.back(), p);
        for (auto& c : b) c = c * inv % p;
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's criterion: monic f of degree k is irreducible over F_p iff
// x^(p^k) == x (mod f) and gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k.
bool is_irreducible(const Poly& f, u64 p, unsigned k) {
    const Poly x = {0, 1};
    // frob[i] = x^(p^i) mod f, built by repeated p-th powers
    std::vector<Poly> frob(k + 1);
    frob[0] = x;
    for (unsigned i = 1; i <= k; ++i) {
        frob[i] = poly_powmod(frob[i - 1], p, f, p);
    }
    if (frob[k] != x) return false;
    for (u64 r : prime_factors(k)) {
        Poly d = poly_sub(frob[k / r], x, p);
        Poly g = poly_gcd(f, std::move(d), p);
        if (degree(g) > 0) return false;
    }
    return true;
}

void check_extension_bounds(u64 p, unsigned k) {
    if (k < 2) throw InvalidInputError("extension degree must be >= 2");
    auto pk = checked_pow(p, k);
    if (!pk || *pk > (u64(1) << 63)) {
        throw OverflowError("p^k - 1 >= 2^63 exceeds the supported range");
    }
}

}  // namespace

PrimeModulus::PrimeModulus(u64 p_in) : p(p_in) {
    if (p < 2 || p >= (u64(1) << 31)) {
        throw InvalidInputError("prime modulus must satisfy 2 <= p < 2^31");
    }
    if (!is_prime(p)) throw InvalidInputError("modulus is not prime");
}

std::vector<u64> find_irreducible(u64 p, unsigned k) {
    PrimeModulus pm(p);
    check_extension_bounds(p, k);
    // Enumerate (c0, ..., c_{k-1}) in ascending lexicographic order with the
    // constant term most significant, i.e. odometer on the last coordinate.
    std::vector<u64> coeffs(k, 0);
    for (;;) {
        Poly f(coeffs);
        f.push_back(1);  // monic
        if (is_irreducible(f, p, k)) return f;
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && coeffs[pos] == p - 1) {
            coeffs[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++coeffs[pos];
    }
    throw InternalError("no irreducible polynomial found");
}

bool in_base_field(const ExtElem& a) {
    for (size_t i = 1; i < a.size(); ++i) {
        if (a[i] != 0) return false;
    }
    return true;
}

ExtElem find_primitive(u64 p, unsigned k, const std::vector<u64>& modulus_poly) {
    FieldContext probe(p, k, modulus_poly);
    return probe.theta();
}

FieldContext::FieldContext(u64 p, unsigned k)
    : FieldContext(p, k, find_irreducible(p, k)) {}

FieldContext::FieldContext(u64 p, unsigned k, std::vector<u64> modulus_poly)
    : p_(p), k_(k), modulus_poly_(std::move(modulus_poly)) {
    PrimeModulus pm(p_);
    check_extension_bounds(p_, k_);
    if (modulus_poly_.size() != k_ + 1 || modulus_poly_.back() != 1) {
        throw InvalidInputError("modulus polynomial must be monic of degree k");
    }
    for (u64 c : modulus_poly_) {
        if (c >= p_) throw InvalidInputError("modulus coefficient out of range");
    }
    if (!is_irreducible(modulus_poly_, p_, k_)) {
        throw InvalidInputError("modulus polynomial is reducible");
    }
    group_order_ = *checked_pow(p_, k_) - 1;
    validate_and_finish();
}

void FieldContext::validate_and_finish() {
    const auto factors = prime_factors(group_order_);
    for (u64 index = 1; index <= group_order_; ++index) {
        ExtElem cand = element_at(index);
        bool primitive = true;
        for (u64 r : factors) {
            if (is_one(pow(cand, group_order_ / r))) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            theta_ = std::move(cand);
            return;
        }
    }
    throw InternalError("no primitive element found; field construction is broken");
}

ExtElem FieldContext::zero() const { return ExtElem(k_, 0); }

ExtElem FieldContext::one() const {
    ExtElem e(k_, 0);
    e[0] = 1;
    return e;
}

ExtElem FieldContext::element_at(u64 index) const {
    ExtElem e(k_, 0);
    for (unsigned i = 0; i < k_ && index; ++i) {
        e[i] = index % p_;
        index /= p_;
    }
    return e;
}

u64 FieldContext::index_of(const ExtElem& a) const {
    u64 idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

ExtElem FieldContext::add(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

ExtElem FieldContext::sub(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

ExtElem FieldContext::mul(const ExtElem& a, const ExtElem& b) const {
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
    }
    // reduce degrees k .. 2k-2 using the monic modulus
    for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
        u64 c = prod[d];
        if (c != 0) {
            prod[d] = 0;
            for (unsigned i = 0; i < k_; ++i) {
                u64 sub_term = c * modulus_poly_[i] % p_;
                prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub_term) % p_;
            }
        }
        if (d == k_) break;
    }
    prod.resize(k_);
    return prod;
}

ExtElem FieldContext::pow(ExtElem a, u64 e) const {
    ExtElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool FieldContext::is_zero(const ExtElem& a) const {
    return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

bool FieldContext::is_one(const ExtElem& a) const {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < k_; ++i) {
        if (a[i] != 0) return false;
    }
    return true;
}

}  // namespace bkg
