#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "atrans/engine.hpp"
#include "atrans/hypergraph.hpp"
#include "atrans/profile.hpp"

namespace atrans {

// Exhaustive-search domain. no_isolated restricts hosts to those covering
// every vertex; iso_reduce walks one representative per isomorphism class.
// Guard rails (hard errors, never silent truncation): C(n, r) <= 24 for the
// labeled sweep, n <= 8 for the isomorphism-reduced one.
struct SearchSpace {
    int n = 0;
    int r = 1;
    bool no_isolated = false;
    bool iso_reduce = false;
};

struct SearchReport {
    SearchSpace space;
    Mode mode = Mode::all;
    std::string profile;       // canonical profile text
    std::uint64_t maximum = 0; // largest (maximal-)transversal count found
    Hypergraph witness;        // a host attaining it
    std::uint64_t explored = 0;
    std::chrono::microseconds elapsed{0};
};

// Every r-uniform hypergraph on n labeled vertices exactly once (one
// representative per isomorphism class with iso_reduce), filtered by
// no_isolated, in a fixed deterministic order.
void for_each_hypergraph(const SearchSpace& space,
                         const std::function<void(const Hypergraph&)>& visit);

// Minimum over all vertex relabelings of the sorted edge-mask sequence,
// packed into bytes. Equal iff isomorphic. Requires n <= 10.
std::string canonical_form(const Hypergraph& h);

// Degree-sequence prefilter, then canonical forms.
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

// Exact extremal value with witness. workers > 1 shards the labeled sweep by
// edge-subset index blocks; results are identical for any worker count.
SearchReport max_transversal_count(const SearchSpace& space, const Profile& p, Mode mode,
                                   int workers = 1);

std::vector<SearchReport> scan_range(int r, int n_lo, int n_hi, const Profile& p, Mode mode,
                                     bool no_isolated, bool iso_reduce, int workers = 1);

} // namespace atrans
