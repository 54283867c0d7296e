#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace atrans {

// Small set of integers in 0..64 (intersection sizes). 128-bit backing so a
// full profile over r = 64 still fits.
class SizeSet {
public:
    static constexpr int max_value = 64;

    constexpr SizeSet() = default;

    static SizeSet of(std::initializer_list<int> vs) {
        SizeSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static SizeSet range(int lo, int hi) { // inclusive; empty when lo > hi
        SizeSet s;
        for (int v = lo; v <= hi; ++v) s.add(v);
        return s;
    }

    void add(int v) { bits_ |= word(1) << v; }
    bool contains(int v) const { return v >= 0 && v <= max_value && ((bits_ >> v) & 1); }
    bool empty() const { return bits_ == 0; }
    int count() const;
    int min() const;  // undefined on empty
    int max() const;  // undefined on empty

    // true iff some admissible value lies in [lo, hi]
    bool any_in(int lo, int hi) const {
        if (lo > max_value || hi < 0 || lo > hi) return false;
        if (lo < 0) lo = 0;
        if (hi > max_value) hi = max_value;
        word window = (word(1) << (hi - lo + 1)) - 1;
        return ((bits_ >> lo) & window) != 0;
    }

    // {a - i : a in *this, a >= i}
    SizeSet shifted_down(int i) const {
        SizeSet s;
        if (i <= max_value) s.bits_ = bits_ >> i;
        return s;
    }

    // a in set and 0 <= b < a implies b in set
    bool downward_closed() const { return empty() || contiguous_from_zero(); }

    std::vector<int> values() const;
    std::string to_string() const; // "0,1"

    friend bool operator==(const SizeSet& a, const SizeSet& b) { return a.bits_ == b.bits_; }

private:
    using word = unsigned __int128;
    word bits_ = 0;

    bool contiguous_from_zero() const {
        // all bits 0..max() set
        return bits_ == ((word(1) << (max() + 1)) - 1);
    }
};

// Admissible intersection sizes bound to a uniformity r: non-empty, all
// elements <= r.
class Profile {
public:
    Profile(SizeSet allowed, int r); // throws std::invalid_argument on violation

    // Accepts "0,1", or keywords: strong, independent, even, odd, all.
    // Throws ParseError on malformed text or out-of-range values.
    static Profile parse(const std::string& text, int r);

    const SizeSet& allowed() const { return allowed_; }
    int r() const { return r_; }
    bool contains(int k) const { return allowed_.contains(k); }
    bool downward_closed() const { return allowed_.downward_closed(); }
    Profile complement() const; // {r - a : a in allowed}
    std::string to_string() const { return allowed_.to_string(); }

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.allowed_ == b.allowed_ && a.r_ == b.r_;
    }

private:
    SizeSet allowed_;
    int r_;
};

// {a - offset : a in profile} intersected with the non-negative integers;
// may be empty.
SizeSet shift_profile(const Profile& p, int offset);

} // namespace atrans
