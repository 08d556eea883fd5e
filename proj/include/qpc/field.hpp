#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qpc/common.hpp"

namespace qpc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^k) with a deterministic element enumeration shared by every other
// module: the index of an element, written base p with the constant term
// first, gives the coefficients of its polynomial representation. Index 0 is
// the additive identity and index 1 the multiplicative identity, so the
// enumeration is stable across runs and machines.
//
// For k > 1 the modulus is the lexicographically smallest monic irreducible
// polynomial of degree k over GF(p), where coefficient lists are compared
// from the constant term upward. Irreducibility is established by trial
// division against every monic polynomial of degree <= k/2.
//
// Instances are immutable and cached; all operations are pure.
class Field {
  public:
    // Cached factory. Requires p prime, k >= 1, p^k <= 2^16.
    static FieldPtr get(unsigned p, unsigned k);

    // Accepts the serialized identity "p^k" or "p^k;mod=c0,c1,...,ck".
    // A modulus, when present, must match the canonical one.
    static FieldPtr parse_spec(const std::string& text);

    // Splits q into (p, k) with p prime; throws std::invalid_argument if q
    // is not a prime power.
    static std::pair<unsigned, unsigned> factor_prime_power(unsigned q);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }

    // k+1 coefficients, constant term first; empty for prime fields.
    std::span<const Elem> modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return tables_ ? add_[std::size_t(a) * q_ + b] : add_slow(a, b); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return tables_ ? mul_[std::size_t(a) * q_ + b] : mul_slow(a, b); }
    Elem neg(Elem a) const { return tables_ ? neg_[a] : neg_slow(a); }

    // Multiplicative inverse; throws std::invalid_argument for a == 0.
    Elem inv(Elem a) const;

    // a^e by repeated squaring (0^0 == 1).
    Elem pow(Elem a, std::uint64_t e) const;

    // "p^k" plus ";mod=..." when k > 1, e.g. "2^2;mod=1,1,1".
    std::string spec_string() const;

  private:
    Field(unsigned p, unsigned k);

    Elem add_slow(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;

    unsigned p_ = 0, k_ = 0, q_ = 0;
    std::vector<Elem> modulus_;  // empty when k == 1
    bool tables_ = false;        // full lookup tables for q <= 256
    std::vector<Elem> add_, mul_, neg_, inv_;
};

}  // namespace qpc
