#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linhash {

/// Arbitrary-precision unsigned integer, base 2^32, little-endian limbs.
/// Only the operations the bound calculators need: add, subtract, schoolbook
/// multiply, small divide, shifts, comparison, decimal formatting.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v) {
        if (v != 0) {
            limbs_.push_back(static_cast<uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }

    static BigUint pow2(uint32_t k) {
        BigUint r;
        r.limbs_.assign(k / 32 + 1, 0);
        r.limbs_.back() = uint32_t{1} << (k % 32);
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    /// Number of bits in the binary representation; 0 for zero.
    uint32_t bit_length() const {
        if (limbs_.empty()) return 0;
        uint32_t top = limbs_.back();
        uint32_t bits = 0;
        while (top != 0) { ++bits; top >>= 1; }
        return static_cast<uint32_t>((limbs_.size() - 1) * 32) + bits;
    }

    int compare(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

    BigUint& operator+=(const BigUint& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
        return *this;
    }
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    /// Requires *this >= o.
    BigUint& operator-=(const BigUint& o) {
        if (*this < o) throw std::underflow_error("BigUint: negative subtraction");
        int64_t borrow = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            int64_t s = static_cast<int64_t>(limbs_[i]) - borrow -
                        (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
            borrow = s < 0;
            limbs_[i] = static_cast<uint32_t>(s + (borrow << 32));
        }
        trim();
        return *this;
    }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint();
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t s = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                             r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(s);
                carry = s >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    BigUint& mul_small(uint32_t m) {
        uint64_t carry = 0;
        for (auto& limb : limbs_) {
            uint64_t s = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
        if (m == 0) limbs_.clear();
        return *this;
    }

    /// Divides in place, returns the remainder. Divisor must be nonzero.
    uint32_t div_small(uint32_t d) {
        if (d == 0) throw std::invalid_argument("BigUint: division by zero");
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<uint32_t>(rem);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigUint t = *this;
        std::string out;
        while (!t.is_zero()) {
            uint32_t chunk = t.div_small(1000000000u);
            std::string part = std::to_string(chunk);
            if (!t.is_zero()) part.insert(0, 9 - part.size(), '0');
            out.insert(0, part);
        }
        return out;
    }

    double to_double() const {
        double r = 0.0;
        for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
        return r;
    }

    /// Fits-in-u64 check plus extraction; throws if too large.
    uint64_t to_u64() const {
        if (bit_length() > 64) throw std::overflow_error("BigUint: does not fit in 64 bits");
        uint64_t v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<uint32_t> limbs_;
};

/// C(n, k), exact. Multiplicative form; every intermediate division is exact.
inline BigUint binomial(uint32_t n, uint32_t k) {
    if (k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint r(1);
    for (uint32_t i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.div_small(i);
    }
    return r;
}

/// Smallest l with 2^l >= n; exact (no floating point). ceil_log2(0) = 0.
inline uint32_t ceil_log2(const BigUint& n) {
    if (n.is_zero()) return 0;
    BigUint m = n;
    m -= BigUint(1);
    return m.bit_length();
}

/// Nonnegative rational with a power-of-two denominator, kept exact.
/// Denominator exponent 0 encodes an integer.
struct Pow2Rational {
    BigUint numerator;
    uint32_t den_exp = 0;  // denominator = 2^den_exp

    static Pow2Rational zero() { return {BigUint(0), 0}; }
    static Pow2Rational one() { return {BigUint(1), 0}; }

    bool is_zero() const { return numerator.is_zero(); }

    /// a/2^x vs b/2^y compared exactly by aligning exponents.
    int compare(const Pow2Rational& o) const {
        BigUint a = numerator * BigUint::pow2(o.den_exp);
        BigUint b = o.numerator * BigUint::pow2(den_exp);
        return a.compare(b);
    }

    double to_double() const {
        return std::ldexp(numerator.to_double(), -static_cast<int>(den_exp));
    }

    /// "num/2^k" reduced so the numerator is odd (or an integer when k = 0).
    std::string to_string() const {
        BigUint num = numerator;
        uint32_t k = den_exp;
        while (k > 0 && !num.is_zero()) {
            BigUint half = num;
            if (half.div_small(2) != 0) break;
            num = half;
            --k;
        }
        if (num.is_zero()) k = 0;
        std::string s = num.to_string();
        if (k > 0) s += "/" + BigUint::pow2(k).to_string();
        return s;
    }
};

}  // namespace linhash
