#pragma once

#include <functional>
#include <vector>

#include "atrans/vertex_set.hpp"

namespace atrans {

// Immutable r-uniform hypergraph on vertices 0..n-1. Edges are vertex masks,
// pairwise distinct, stored in ascending mask order; n is capped at 64 so a
// vertex set is one machine word.
class Hypergraph {
public:
    Hypergraph() : n_(0), r_(1) {}
    // Validates: 0 <= n <= 64, 1 <= r, every edge has exactly r bits inside
    // [0, n). Duplicate edges are collapsed.
    Hypergraph(int n, int r, std::vector<VertexSet> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet covered() const; // union of all edges
    int degree(int v) const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_;
    int r_;
    std::vector<VertexSet> edges_;
};

// Edge lists given as vertex indices; each edge must hold r distinct indices
// in [0, n).
Hypergraph build_hypergraph(int n, int r, const std::vector<std::vector<int>>& edges);

// v together with every vertex sharing a hyperedge with v.
VertexSet closed_neighborhood(const Hypergraph& h, int v);

VertexSet isolated_vertices(const Hypergraph& h);

// Keeps exactly the edges contained in keep; vertices are reindexed
// compactly to 0..|keep|-1 preserving order. induced_index_map gives the
// new-index -> old-index table for callers that need to translate back.
Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet keep);
std::vector<int> induced_index_map(VertexSet keep);

// Translate a set expressed in reindexed coordinates back through the map.
VertexSet expand_indices(VertexSet reindexed, const std::vector<int>& new_to_old);

// k-uniform hypergraph of all k-subsets of edges of h; 1 <= k < r.
Hypergraph k_shadow(const Hypergraph& h, int k);

// Append r_target - r fresh vertices (highest indices) and add all of them
// to every edge; r_target > r.
Hypergraph lift_common(const Hypergraph& h, int r_target);

// All k-element subsets of the set bits of base, deterministic order.
void for_each_k_subset(VertexSet base, int k, const std::function<void(VertexSet)>& fn);

} // namespace atrans
