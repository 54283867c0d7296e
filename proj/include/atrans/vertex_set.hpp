#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace atrans {

// Set of vertex indices 0..63 packed into one machine word.
// Ordering is plain numeric mask order: vertex 0 is the least significant
// bit, so ascending mask value is the canonical enumeration order everywhere.
struct VertexSet {
    std::uint64_t bits = 0;

    static constexpr int capacity = 64;

    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t mask) : bits(mask) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t(1) << v); }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= std::uint64_t(1) << v;
        return s;
    }

    static VertexSet from_indices(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.bits |= std::uint64_t(1) << v;
        return s;
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr int lowest() const { return std::countr_zero(bits); } // undefined on empty set

    constexpr VertexSet with(int v) const { return VertexSet(bits | (std::uint64_t(1) << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits & ~(std::uint64_t(1) << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits ^ o.bits); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
    VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }

    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

    template <class F>
    void for_each(F f) const {
        for (std::uint64_t m = bits; m; m &= m - 1) f(std::countr_zero(m));
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }
};

} // namespace atrans

template <>
struct std::hash<atrans::VertexSet> {
    std::size_t operator()(atrans::VertexSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits);
    }
};
