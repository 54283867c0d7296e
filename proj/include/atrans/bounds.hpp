#pragma once

#include <optional>
#include <string>

#include "atrans/exact.hpp"
#include "atrans/profile.hpp"

namespace atrans {

// Largest number of maximal independent sets in an n-vertex graph:
//   3^(n/3), 4*3^(floor(n/3)-1), or 2*3^(floor(n/3)) by n mod 3.
// Returned as the exact formula value (a rational for n < 3).
Rational moon_moser(long long n);

// Sharp upper bound for the number of maximal strongly independent sets in a
// 3-uniform n-vertex hypergraph:
//   3^(n/3), 4*3^((n-4)/3), or 16*3^((n-8)/3) by n mod 3.
// Non-integral for small n (e.g. 16/3 at n = 5); the bound still holds.
Rational msis_bound(long long n);

enum class GraphStat { all_transversals, maximal_transversals }; // the g / h rows

// Extremal value over graphs (r = 2) for each of the seven non-empty
// profiles. The all_transversals row requires hosts without isolated
// vertices and n >= 2; out-of-range requests return nullopt ("undefined").
std::optional<Rational> graph_table_value(const Profile& p, long long n, GraphStat which);

// Number of admissible ways to intersect a q-block when `offset` chosen
// vertices already sit outside it: sum of C(q, b) over b in the shifted
// profile, b <= q.
BigNat f_value(int q, int offset, const Profile& p);

// The optimizing block size / offset pair for the growth base
// f(p, i, A)^(1/p).
struct ExponentChoice {
    int p = 1;
    int offset = 0;
    BigNat f;            // f(p, offset, A)
    double base = 1.0;   // f^(1/p), informational only

    std::string to_string() const;
};

// Maximizes f(q, i, A)^(1/q) over 1 <= q <= r, 0 <= i <= r - q. Candidates
// are compared exactly via f1^q2 vs f2^q1; ties break to the smallest q,
// then the smallest i. Floating point never decides.
ExponentChoice best_exponent(const Profile& p, int r);

// 2^floor((r-1)n/r), the extremal count for the even and for the odd
// profile; requires n >= r >= 2.
BigNat parity_bound(int r, long long n);

// Elementary extremal identities for special profiles.
enum class ElementaryCase {
    single_zero,      // i:   profile {0}: both extremal counts are 1
    contains_r,       // ii:  r in profile: maximal count is 1
    single_r,         // iii: profile {r}: count over isolated-free hosts is 1
    full_range,       // iv:  profile {0..r}: 2^n
    zero_or_r,        // v:   profile {0,r}: 2^floor(n/r)
    complement_pair,  // vi:  profile A vs {r-a : a in A}: equal counts
    singleton_profile // vii: profile {a}: every transversal is maximal (n >= r)
};

struct ElementaryResult {
    std::optional<Rational> value; // numeric cases
    std::string relation;          // human-readable statement
};

ElementaryResult elementary_value(ElementaryCase c, int r, long long n);

} // namespace atrans
