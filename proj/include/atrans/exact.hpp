#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace atrans {

// Arbitrary-precision unsigned integer, little-endian 64-bit limbs.
// Covers exact counting (counts can pass 2^63) and the exact cross-power
// comparisons f(q1)^q2 vs f(q2)^q1 used by the exponent optimizer.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);                     // NOLINT: implicit by design
    static BigNat from_u128(unsigned __int128 v);
    static BigNat pow2(unsigned k);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; } // caller checks fits_u64
    unsigned bit_length() const;

    BigNat& operator+=(const BigNat& o);
    friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }
    BigNat operator-(const BigNat& o) const; // requires *this >= o
    friend BigNat operator*(const BigNat& a, const BigNat& b);
    BigNat& operator*=(const BigNat& o) { *this = *this * o; return *this; }
    BigNat pow(unsigned e) const;
    BigNat shl(unsigned k) const;

    // quotient and remainder; d must be non-zero
    static std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& d);
    static BigNat gcd(BigNat a, BigNat b);

    std::strong_ordering operator<=>(const BigNat& o) const;
    bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }

    std::string to_string() const; // decimal
    double to_double() const;

private:
    std::vector<std::uint64_t> limbs_; // no trailing zero limbs; empty == 0
    void trim();
    bool bit(unsigned k) const;
};

// Exact non-negative rational, kept in lowest terms.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::uint64_t v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(BigNat v) : num_(std::move(v)), den_(1) {}
    Rational(BigNat num, BigNat den); // den must be non-zero; reduced on construction

    const BigNat& num() const { return num_; }
    const BigNat& den() const { return den_; }
    bool is_integer() const { return den_ == BigNat(1); }
    BigNat floor() const { return BigNat::divmod(num_, den_).first; }

    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const;

    std::string to_string() const; // "16/3", or "16" when integral
    double to_double() const;

private:
    BigNat num_, den_;
};

} // namespace atrans
