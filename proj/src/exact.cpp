#include "atrans/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace atrans {

BigNat::BigNat(std::uint64_t v) {
    if (v) limbs_.push_back(v);
}

BigNat BigNat::from_u128(unsigned __int128 v) {
    BigNat r;
    if (v) r.limbs_.push_back(static_cast<std::uint64_t>(v));
    if (v >> 64) r.limbs_.push_back(static_cast<std::uint64_t>(v >> 64));
    return r;
}

BigNat BigNat::pow2(unsigned k) {
    BigNat r;
    r.limbs_.assign(k / 64 + 1, 0);
    r.limbs_.back() = std::uint64_t(1) << (k % 64);
    return r;
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

unsigned BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return static_cast<unsigned>(64 * (limbs_.size() - 1)) +
           (64 - static_cast<unsigned>(std::countl_zero(limbs_.back())));
}

bool BigNat::bit(unsigned k) const {
    std::size_t i = k / 64;
    if (i >= limbs_.size()) return false;
    return (limbs_[i] >> (k % 64)) & 1u;
}

BigNat& BigNat::operator+=(const BigNat& o) {
    limbs_.resize(std::max(limbs_.size(), o.limbs_.size()) + 1, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    trim();
    return *this;
}

BigNat BigNat::operator-(const BigNat& o) const {
    if (*this < o) throw std::invalid_argument("BigNat: negative subtraction");
    BigNat r = *this;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        unsigned __int128 sub = borrow;
        if (i < o.limbs_.size()) sub += o.limbs_[i];
        if (static_cast<unsigned __int128>(r.limbs_[i]) >= sub) {
            r.limbs_[i] = static_cast<std::uint64_t>(r.limbs_[i] - sub);
            borrow = 0;
        } else {
            r.limbs_[i] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(1) << 64) + r.limbs_[i] - sub);
            borrow = 1;
        }
    }
    r.trim();
    return r;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            unsigned __int128 cur = r.limbs_[i + j] + carry +
                static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j];
            r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        r.limbs_[i + b.limbs_.size()] = static_cast<std::uint64_t>(carry);
    }
    r.trim();
    return r;
}

BigNat BigNat::pow(unsigned e) const {
    BigNat r(1);
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
}

BigNat BigNat::shl(unsigned k) const {
    if (is_zero()) return {};
    BigNat r;
    unsigned words = k / 64, rem = k % 64;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + words] |= rem ? (limbs_[i] << rem) : limbs_[i];
        if (rem) r.limbs_[i + words + 1] |= limbs_[i] >> (64 - rem);
    }
    r.trim();
    return r;
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& a, const BigNat& d) {
    if (d.is_zero()) throw std::invalid_argument("BigNat: division by zero");
    if (a < d) return {BigNat(), a};
    unsigned shift = a.bit_length() - d.bit_length();
    BigNat rem = a, quot;
    quot.limbs_.assign(shift / 64 + 1, 0);
    for (int k = static_cast<int>(shift); k >= 0; --k) {
        BigNat t = d.shl(static_cast<unsigned>(k));
        if (t <= rem) {
            rem = rem - t;
            quot.limbs_[static_cast<std::size_t>(k) / 64] |= std::uint64_t(1) << (k % 64);
        }
    }
    quot.trim();
    return {quot, rem};
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
    while (!b.is_zero()) {
        BigNat r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::strong_ordering BigNat::operator<=>(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    // peel 19 decimal digits at a time
    constexpr std::uint64_t chunk = 10000000000000000000ull;
    std::vector<std::uint64_t> groups;
    std::vector<std::uint64_t> cur = limbs_;
    while (!cur.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            unsigned __int128 v = (rem << 64) | cur[i];
            cur[i] = static_cast<std::uint64_t>(v / chunk);
            rem = v % chunk;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        groups.push_back(static_cast<std::uint64_t>(rem));
    }
    std::string out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out += std::string(19 - part.size(), '0') + part;
    }
    return out;
}

double BigNat::to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return r;
}

Rational::Rational(BigNat num, BigNat den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigNat(1);
        return;
    }
    BigNat g = BigNat::gcd(num_, den_);
    if (!(g == BigNat(1))) {
        num_ = BigNat::divmod(num_, g).first;
        den_ = BigNat::divmod(den_, g).first;
    }
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return (num_ * o.den_) <=> (o.num_ * den_);
}

bool Rational::operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
    return num_.to_double() / den_.to_double();
}

} // namespace atrans
