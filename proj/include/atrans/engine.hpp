#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <vector>

#include "atrans/exact.hpp"
#include "atrans/hypergraph.hpp"
#include "atrans/profile.hpp"

namespace atrans {

enum class Mode { all, maximal };

struct CountResult {
    BigNat count;
    std::vector<VertexSet> witnesses; // first few sets, when requested
    std::chrono::microseconds elapsed{0};
};

// A hypergraph paired with a profile whose sizes fit its uniformity.
struct TransversalQuery {
    Hypergraph hypergraph;
    Profile profile;
    Mode mode = Mode::all;

    static TransversalQuery make(Hypergraph h, Profile p, Mode m);
};

// true iff every edge meets s in an admissible number of vertices
// (vacuously true on the edgeless hypergraph). s must lie within vertices.
bool is_transversal(const Hypergraph& h, const Profile& p, VertexSet s);

// Visits every transversal exactly once in ascending mask order; vertices in
// `forced` are required members. Return false from the callback to stop.
void for_each_transversal(const Hypergraph& h, const Profile& p,
                          const std::function<bool(VertexSet)>& visit,
                          VertexSet forced = {});

std::vector<VertexSet> enumerate_transversals(const Hypergraph& h, const Profile& p);

// Exact count; decomposes over connected components (counts multiply, each
// isolated vertex contributes a factor 2). With max_witnesses > 0 the count
// is taken from a direct enumeration instead and the first few sets are kept.
CountResult count_transversals(const Hypergraph& h, const Profile& p,
                               std::size_t max_witnesses = 0);

// No proper superset of s is a transversal. s itself must be one, otherwise
// std::invalid_argument is thrown. Downward-closed profiles use the
// single-vertex extension test; general profiles fall back to a search over
// supersets.
bool is_maximal_transversal(const Hypergraph& h, const Profile& p, VertexSet s);

// Inclusion-maximal transversals in ascending mask order; empty when no
// transversal exists at all.
std::vector<VertexSet> enumerate_maximal(const Hypergraph& h, const Profile& p);

// Maximal strongly independent sets of a 3-uniform hypergraph via the
// branching recursion: pick x with |N[x]| minimal, branch on v in N[x],
// recurse on the subhypergraph induced by V \ N[v], extend with v, keep the
// candidates that are maximal, deduplicate. Agrees with
// enumerate_maximal(h, {0,1}).
std::vector<VertexSet> enumerate_msis_branching(const Hypergraph& h);

CountResult run_query(const TransversalQuery& q, std::size_t max_witnesses = 0);

} // namespace atrans
