#pragma once

#include <cstdint>
#include <vector>

#include "bkg/numeric.hpp"

namespace bkg {

/// Element of F_{p^k} as a coefficient vector over F_p, constant term first.
/// Length is always exactly the extension degree k.
using ExtElem = std::vector<u64>;

/// Prime p with 2 <= p < 2^31, validated on construction.
struct PrimeModulus {
    u64 p;
    explicit PrimeModulus(u64 p);
};

/// Lexicographically first monic irreducible polynomial of degree k over F_p,
/// comparing coefficient tuples from the constant term up. Returns k+1
/// coefficients, constant first, leading coefficient 1.
std::vector<u64> find_irreducible(u64 p, unsigned k);

/// First element, in coefficient-vector enumeration order (constant
/// coefficient fastest-varying, ascending), of multiplicative order exactly
/// p^k - 1. Order is certified against every prime factor of p^k - 1.
ExtElem find_primitive(u64 p, unsigned k, const std::vector<u64>& modulus_poly);

/// True iff every coefficient of degree >= 1 vanishes.
bool in_base_field(const ExtElem& a);

/// A concrete realization of F_{p^k}: the reducing polynomial, a certified
/// generator theta, and the group order p^k - 1 (< 2^63 enforced).
/// Immutable after construction; all operations are pure.
class FieldContext {
  public:
    FieldContext(u64 p, unsigned k);
    FieldContext(u64 p, unsigned k, std::vector<u64> modulus_poly);

    u64 p() const { return p_; }
    unsigned degree() const { return k_; }
    const std::vector<u64>& modulus_poly() const { return modulus_poly_; }
    const ExtElem& theta() const { return theta_; }
    u64 group_order() const { return group_order_; }
    u64 field_size() const { return group_order_ + 1; }

    ExtElem zero() const;
    ExtElem one() const;
    /// Element with coefficient vector = base-p digits of index, c0 least
    /// significant. Bijection between [0, p^k) and the field.
    ExtElem element_at(u64 index) const;
    u64 index_of(const ExtElem& a) const;

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    /// a^e by square-and-multiply; a^0 = 1.
    ExtElem pow(ExtElem a, u64 e) const;

    bool is_zero(const ExtElem& a) const;
    bool is_one(const ExtElem& a) const;

  private:
    void validate_and_finish();

    u64 p_ = 0;
    unsigned k_ = 0;
    std::vector<u64> modulus_poly_;
    ExtElem theta_;
    u64 group_order_ = 0;
};

}  // namespace bkg
