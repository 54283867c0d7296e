#include "atrans/constructions.hpp"

#include <stdexcept>

#include "atrans/bounds.hpp"

namespace atrans {

namespace {

VertexSet block(int first, int len) {
    VertexSet s;
    for (int i = 0; i < len; ++i) s = s.with(first + i);
    return s;
}

std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 res = 1;
    for (int j = 1; j <= k; ++j) {
        res = res * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    }
    return static_cast<std::uint64_t>(res);
}

} // namespace

Hypergraph matching(int n, int r) {
    if (n < r) throw std::invalid_argument("matching: n must be at least r");
    std::vector<VertexSet> edges;
    for (int i = 0; i + r <= n; i += r) edges.push_back(block(i, r));
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph msis_extremal(int n) {
    if (n < 6) throw std::invalid_argument("msis_extremal: n must be at least 6");
    std::vector<VertexSet> edges;
    int complete_blocks = (n % 3 == 0) ? 0 : (n % 3 == 1 ? 1 : 2);
    int triples = (n - 4 * complete_blocks) / 3;
    int v = 0;
    for (int i = 0; i < triples; ++i, v += 3) edges.push_back(block(v, 3));
    for (int i = 0; i < complete_blocks; ++i, v += 4)
        for_each_k_subset(block(v, 4), 3, [&](VertexSet e) { edges.push_back(e); });
    return Hypergraph(n, 3, std::move(edges));
}

Hypergraph star(int n) {
    if (n < 2) throw std::invalid_argument("star: n must be at least 2");
    std::vector<VertexSet> edges;
    for (int v = 1; v < n; ++v) edges.push_back(VertexSet::of({0, v}));
    return Hypergraph(n, 2, std::move(edges));
}

Hypergraph component_packing(int r, int n) {
    if (n < r) throw std::invalid_argument("component_packing: n must be at least r");
    std::vector<VertexSet> edges;
    int plain = n / r - 1; // disjoint edges before the complete tail
    int v = 0;
    for (int i = 0; i < plain; ++i, v += r) edges.push_back(block(v, r));
    for_each_k_subset(block(v, n - v), r, [&](VertexSet e) { edges.push_back(e); });
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph sunflower(const Profile& prof, int r, int n) {
    if (prof.r() != r)
        throw std::invalid_argument("sunflower: profile bound to a different uniformity");
    SizeSet allowed = prof.allowed();
    SizeSet only_r;
    only_r.add(r);
    if (allowed == only_r)
        throw std::invalid_argument("sunflower: undefined for the profile {r}");
    if (n < 4 * r) throw std::invalid_argument("sunflower: need n >= 4r");
    if (n > VertexSet::capacity) throw std::invalid_argument("sunflower: vertex capacity exceeded");

    ExponentChoice choice = best_exponent(prof, r);
    int p = choice.p;
    VertexSet core = block(0, r - p);
    int blocks = (n - 2 * r + p) / p;
    std::vector<VertexSet> edges;
    int v = r - p;
    for (int j = 0; j < blocks; ++j, v += p) edges.push_back(core | block(v, p));

    int residue = n - v;
    if (residue < r || residue > r + p)
        throw std::logic_error("sunflower: residue block out of the expected range");
    int a = -1;
    for (int x : allowed.values())
        if (x != r) a = x; // largest admissible size below r
    VertexSet fixed = block(v, a);
    VertexSet rest = block(v + a, residue - a);
    for_each_k_subset(rest, r - a, [&](VertexSet s) { edges.push_back(fixed | s); });
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph parity_overlap(int r, int n) {
    if (n < r) throw std::invalid_argument("parity_overlap: n must be at least r");
    int a = n / r, b = n % r;
    if (b == 0) return matching(n, r);
    std::vector<VertexSet> edges;
    int v = 0;
    for (int i = 0; i < a - 1; ++i, v += r) edges.push_back(block(v, r));
    // two edges over the final r+b vertices, overlapping in the lowest r-b
    VertexSet shared = block(v, r - b);
    edges.push_back(shared | block(v + r - b, b));
    edges.push_back(shared | block(v + r, b));
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int r) {
    if (n < r) throw std::invalid_argument("complete_hypergraph: n must be at least r");
    if (binom_u64(n, r) > (std::uint64_t(1) << 20))
        throw std::invalid_argument("complete_hypergraph: too many edges");
    std::vector<VertexSet> edges;
    for_each_k_subset(VertexSet::full(n), r, [&](VertexSet e) { edges.push_back(e); });
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph build_construction(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::matching: return matching(spec.n, spec.r);
        case ConstructionKind::msis_extremal: return msis_extremal(spec.n);
        case ConstructionKind::star: return star(spec.n);
        case ConstructionKind::component_packing: return component_packing(spec.r, spec.n);
        case ConstructionKind::sunflower:
            if (!spec.profile)
                throw std::invalid_argument("sunflower construction needs a profile");
            return sunflower(*spec.profile, spec.r, spec.n);
        case ConstructionKind::parity_overlap: return parity_overlap(spec.r, spec.n);
        case ConstructionKind::complete: return complete_hypergraph(spec.n, spec.r);
    }
    throw std::invalid_argument("unknown construction kind");
}

std::optional<ConstructionKind> construction_kind_from_token(const std::string& token) {
    if (token == "matching") return ConstructionKind::matching;
    if (token == "msis-extremal") return ConstructionKind::msis_extremal;
    if (token == "star") return ConstructionKind::star;
    if (token == "component-packing") return ConstructionKind::component_packing;
    if (token == "sunflower") return ConstructionKind::sunflower;
    if (token == "parity-overlap") return ConstructionKind::parity_overlap;
    if (token == "complete") return ConstructionKind::complete;
    return std::nullopt;
}

std::string construction_token(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::matching: return "matching";
        case ConstructionKind::msis_extremal: return "msis-extremal";
        case ConstructionKind::star: return "star";
        case ConstructionKind::component_packing: return "component-packing";
        case ConstructionKind::sunflower: return "sunflower";
        case ConstructionKind::parity_overlap: return "parity-overlap";
        case ConstructionKind::complete: return "complete";
    }
    return "?";
}

} // namespace atrans
