#include "qpc/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpc {

BigUint::BigUint(std::uint64_t v) {
    while (v != 0) {
        limbs_.push_back(std::uint32_t(v));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::operator+(const BigUint& other) const {
    BigUint r;
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    r.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < other.limbs_.size()) s += other.limbs_[i];
        r.limbs_[i] = std::uint32_t(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(std::uint32_t(carry));
    return r;
}

BigUint BigUint::operator-(const BigUint& other) const {
    if (*this < other) throw std::underflow_error("BigUint subtraction would go negative");
    BigUint r;
    r.limbs_.resize(limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t s = std::int64_t(limbs_[i]) - borrow;
        if (i < other.limbs_.size()) s -= other.limbs_[i];
        if (s < 0) {
            s += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = std::uint32_t(s);
    }
    r.trim();
    return r;
}

BigUint BigUint::operator*(const BigUint& other) const {
    if (is_zero() || other.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur =
                std::uint64_t(limbs_[i]) * other.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = std::uint32_t(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry) {
            std::uint64_t cur = std::uint64_t(r.limbs_[k]) + carry;
            r.limbs_[k] = std::uint32_t(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) return limbs_.size() <=> other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    return std::strong_ordering::equal;
}

BigUint BigUint::power(std::uint64_t base, std::uint64_t exp) {
    BigUint r(1), b(base);
    while (exp != 0) {
        if (exp & 1) r = r * b;
        exp >>= 1;
        if (exp != 0) b = b * b;
    }
    return r;
}

BigUint BigUint::factorial(std::uint64_t n) {
    BigUint r(1);
    for (std::uint64_t i = 2; i <= n; ++i) r = r * BigUint(i);
    return r;
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = std::uint64_t(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        // divide by 10^9, collecting the remainder
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = std::uint32_t(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string chunk = std::to_string(rem);
        if (work.empty()) {
            out.insert(0, chunk);
        } else {
            out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
        }
    }
    return out;
}

BigInt BigInt::difference(const BigUint& a, const BigUint& b) {
    if (a >= b) return BigInt{false, a - b};
    return BigInt{true, b - a};
}

std::string BigInt::to_string() const {
    return negative ? "-" + mag.to_string() : mag.to_string();
}

}  // namespace qpc
