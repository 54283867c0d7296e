#pragma once

#include <optional>
#include <string>

#include "atrans/hypergraph.hpp"
#include "atrans/profile.hpp"

namespace atrans {

// floor(n/r) pairwise disjoint r-edges on the lowest indices; leftover
// vertices stay isolated. Requires n >= r.
Hypergraph matching(int n, int r);

// 3-uniform host attaining the maximal-strongly-independent-set bound:
// disjoint triples, topped up with one or two complete 4-vertex blocks
// depending on n mod 3. Requires n >= 6; no isolated vertices.
Hypergraph msis_extremal(int n);

// Graph star: vertex 0 joined to all others; n >= 2.
Hypergraph star(int n);

// floor(n/r) - 1 disjoint r-edges plus a complete r-uniform block on the
// remaining r..2r-1 vertices: the isolated-free host with the most
// components. Requires n >= r.
Hypergraph component_packing(int r, int n);

// Sunflower-style host maximizing the transversal growth base: a common core
// of r-p vertices completed by disjoint p-blocks, plus a residue block R
// carrying a fixed a-set whose r-supersets inside R are all edges. (p, i)
// come from best_exponent. Requires profile != {r} and n >= 4r.
Hypergraph sunflower(const Profile& p, int r, int n);

// For n = a*r + b: a disjoint edges when b = 0; otherwise a-1 disjoint edges
// plus two edges sharing r-b vertices. Attains parity_bound. Requires n >= r.
Hypergraph parity_overlap(int r, int n);

// All C(n, r) edges; n >= r. Edge count is capped (the builder refuses
// hypergraphs with more than 2^20 edges).
Hypergraph complete_hypergraph(int n, int r);

enum class ConstructionKind {
    matching,
    msis_extremal,
    star,
    component_packing,
    sunflower,
    parity_overlap,
    complete
};

struct ConstructionSpec {
    ConstructionKind kind;
    int n = 0;
    int r = 0;
    std::optional<Profile> profile; // sunflower only
};

Hypergraph build_construction(const ConstructionSpec& spec);

// CLI token <-> kind ("matching", "msis-extremal", "star",
// "component-packing", "sunflower", "parity-overlap", "complete").
std::optional<ConstructionKind> construction_kind_from_token(const std::string& token);
std::string construction_token(ConstructionKind kind);

} // namespace atrans
