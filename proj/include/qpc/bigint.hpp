#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qpc {

// Unsigned big integer, base 2^32 limbs, little endian. Just enough exact
// arithmetic for the counting bounds: add, subtract, multiply, power,
// factorial, compare, decimal printing.
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    static BigUint power(std::uint64_t base, std::uint64_t exp);
    static BigUint factorial(std::uint64_t n);

    BigUint operator+(const BigUint& other) const;
    BigUint operator-(const BigUint& other) const;  // throws std::underflow_error if other > *this
    BigUint operator*(const BigUint& other) const;

    std::strong_ordering operator<=>(const BigUint& other) const;
    bool operator==(const BigUint& other) const = default;

    bool is_zero() const { return limbs_.empty(); }
    std::uint64_t to_u64() const;  // throws std::overflow_error if it does not fit
    std::string to_string() const;

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

// Signed value for bound exponents, which can be negative at desk scale.
struct BigInt {
    bool negative = false;  // never set when mag == 0
    BigUint mag;

    static BigInt difference(const BigUint& a, const BigUint& b);  // a - b
    std::string to_string() const;
    bool operator==(const BigInt& other) const = default;
};

}  // namespace qpc
