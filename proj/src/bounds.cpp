#include "atrans/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace atrans {

namespace {

// c * 3^e as an exact rational (e may be negative)
Rational times_pow3(std::uint64_t c, long long e) {
    if (e >= 0) return Rational(BigNat(c) * BigNat(3).pow(static_cast<unsigned>(e)));
    return Rational(BigNat(c), BigNat(3).pow(static_cast<unsigned>(-e)));
}

BigNat binomial(int q, int b) {
    if (b < 0 || b > q) return BigNat();
    if (b > q - b) b = q - b;
    BigNat res(1);
    for (int j = 1; j <= b; ++j) {
        res *= BigNat(static_cast<std::uint64_t>(q - b + j));
        res = BigNat::divmod(res, BigNat(static_cast<std::uint64_t>(j))).first;
    }
    return res;
}

} // namespace

Rational moon_moser(long long n) {
    if (n < 1) throw std::invalid_argument("moon_moser: n must be at least 1");
    switch (n % 3) {
        case 0: return times_pow3(1, n / 3);
        case 1: return times_pow3(4, n / 3 - 1);
        default: return times_pow3(2, n / 3);
    }
}

Rational msis_bound(long long n) {
    if (n < 0) throw std::invalid_argument("msis_bound: n must be non-negative");
    switch (n % 3) {
        case 0: return times_pow3(1, n / 3);
        case 1: return times_pow3(4, (n - 4) / 3);
        default: return times_pow3(16, (n - 8) / 3);
    }
}

std::optional<Rational> graph_table_value(const Profile& p, long long n, GraphStat which) {
    if (p.r() != 2)
        throw std::invalid_argument("graph_table_value: profile must be over uniformity 2");
    if (which == GraphStat::all_transversals && n < 2) return std::nullopt;
    if (which == GraphStat::maximal_transversals && n < 1) return std::nullopt;

    const SizeSet& a = p.allowed();
    auto npow2 = [&](long long e) { return Rational(BigNat::pow2(static_cast<unsigned>(e))); };
    auto one_plus_half = [&]() {
        return Rational(BigNat(1) + BigNat::pow2(static_cast<unsigned>(n - 1)));
    };

    if (which == GraphStat::all_transversals) {
        if (a == SizeSet::of({0}) || a == SizeSet::of({2})) return Rational(std::uint64_t(1));
        if (a == SizeSet::of({1}) || a == SizeSet::of({0, 2})) return npow2(n / 2);
        if (a == SizeSet::of({0, 1}) || a == SizeSet::of({1, 2})) return one_plus_half();
        return npow2(n); // {0,1,2}
    }
    if (a == SizeSet::of({1})) return npow2(n / 2);
    if (a == SizeSet::of({0, 1})) return moon_moser(n);
    return Rational(std::uint64_t(1)); // {0}, {2}, {0,2}, {1,2}, {0,1,2}
}

BigNat f_value(int q, int offset, const Profile& p) {
    if (q < 0 || offset < 0)
        throw std::invalid_argument("f_value: q and offset must be non-negative");
    BigNat sum;
    for (int b : shift_profile(p, offset).values())
        if (b <= q) sum += binomial(q, b);
    return sum;
}

std::string ExponentChoice::to_string() const {
    return "p=" + std::to_string(p) + " i=" + std::to_string(offset) +
           " f=" + f.to_string();
}

ExponentChoice best_exponent(const Profile& p, int r) {
    if (r < 1) throw std::invalid_argument("best_exponent: r must be at least 1");
    if (p.allowed().max() > r)
        throw std::invalid_argument("best_exponent: profile exceeds uniformity");
    ExponentChoice best;
    bool have = false;
    for (int q = 1; q <= r; ++q) {
        for (int i = 0; i + q <= r; ++i) {
            BigNat f = f_value(q, i, p);
            if (!have) {
                best = {q, i, f, 0.0};
                have = true;
                continue;
            }
            // f^(1/q) > best.f^(1/best.p)  <=>  f^best.p > best.f^q
            if (f.pow(static_cast<unsigned>(best.p)) >
                best.f.pow(static_cast<unsigned>(q)))
                best = {q, i, f, 0.0};
        }
    }
    if (best.f.is_zero())
        throw std::invalid_argument("best_exponent: no feasible block"); // unreachable for valid profiles
    best.base = std::pow(best.f.to_double(), 1.0 / best.p);
    return best;
}

BigNat parity_bound(int r, long long n) {
    if (r < 2) throw std::invalid_argument("parity_bound: r must be at least 2");
    if (n < r) throw std::invalid_argument("parity_bound: n must be at least r");
    long long e = static_cast<long long>(r - 1) * n / r;
    return BigNat::pow2(static_cast<unsigned>(e));
}

ElementaryResult elementary_value(ElementaryCase c, int r, long long n) {
    if (r < 1) throw std::invalid_argument("elementary_value: r must be at least 1");
    if (n < 0) throw std::invalid_argument("elementary_value: n must be non-negative");
    switch (c) {
        case ElementaryCase::single_zero:
            return {Rational(std::uint64_t(1)),
                    "profile {0}: exactly one transversal either way"};
        case ElementaryCase::contains_r:
            return {Rational(std::uint64_t(1)),
                    "r in profile: the full vertex set is the unique maximal transversal"};
        case ElementaryCase::single_r:
            return {Rational(std::uint64_t(1)),
                    "profile {r}: over isolated-free hosts only the full vertex set qualifies"};
        case ElementaryCase::full_range:
            return {Rational(BigNat::pow2(static_cast<unsigned>(n))),
                    "profile {0..r}: every subset qualifies"};
        case ElementaryCase::zero_or_r:
            if (n < r)
                throw std::invalid_argument("elementary_value: zero_or_r needs n >= r");
            return {Rational(BigNat::pow2(static_cast<unsigned>(n / r))),
                    "profile {0,r}: one choice per connected component"};
        case ElementaryCase::complement_pair:
            return {std::nullopt,
                    "profiles A and {r-a : a in A} have equal extremal counts"};
        case ElementaryCase::singleton_profile:
            return {std::nullopt,
                    "profile {a}, n >= r: every transversal of an isolated-free host is maximal"};
    }
    throw std::invalid_argument("elementary_value: unknown case");
}

} // namespace atrans
