#include "atrans/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace atrans {

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n_ < 0 || n_ > VertexSet::capacity)
        throw std::invalid_argument("hypergraph: vertex count must be in 0..64, got " +
                                    std::to_string(n_));
    if (r_ < 1)
        throw std::invalid_argument("hypergraph: uniformity must be at least 1");
    VertexSet all = VertexSet::full(n_);
    for (VertexSet e : edges_) {
        if (!e.subset_of(all))
            throw std::invalid_argument("hypergraph: edge uses a vertex index >= n");
        if (e.count() != r_)
            throw std::invalid_argument("hypergraph: edge of size " +
                                        std::to_string(e.count()) + ", expected " +
                                        std::to_string(r_));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

VertexSet Hypergraph::covered() const {
    VertexSet u;
    for (VertexSet e : edges_) u |= e;
    return u;
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (VertexSet e : edges_)
        if (e.contains(v)) ++d;
    return d;
}

Hypergraph build_hypergraph(int n, int r, const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (const auto& edge : edges) {
        VertexSet e;
        for (int v : edge) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("hypergraph: vertex " + std::to_string(v) +
                                            " out of range [0," + std::to_string(n) + ")");
            if (e.contains(v))
                throw std::invalid_argument("hypergraph: duplicate vertex " +
                                            std::to_string(v) + " in edge");
            e = e.with(v);
        }
        masks.push_back(e);
    }
    return Hypergraph(n, r, std::move(masks));
}

VertexSet closed_neighborhood(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n())
        throw std::invalid_argument("closed_neighborhood: vertex out of range");
    VertexSet nb = VertexSet::single(v);
    for (VertexSet e : h.edges())
        if (e.contains(v)) nb |= e;
    return nb;
}

VertexSet isolated_vertices(const Hypergraph& h) {
    return h.vertices() - h.covered();
}

std::vector<int> induced_index_map(VertexSet keep) {
    return keep.to_indices();
}

Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet keep) {
    if (!keep.subset_of(h.vertices()))
        throw std::invalid_argument("induced_subhypergraph: set not within vertices");
    std::vector<int> old_to_new(static_cast<std::size_t>(h.n()), -1);
    int next = 0;
    keep.for_each([&](int v) { old_to_new[static_cast<std::size_t>(v)] = next++; });
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        if (!e.subset_of(keep)) continue;
        VertexSet mapped;
        e.for_each([&](int v) { mapped = mapped.with(old_to_new[static_cast<std::size_t>(v)]); });
        edges.push_back(mapped);
    }
    return Hypergraph(keep.count(), h.r(), std::move(edges));
}

VertexSet expand_indices(VertexSet reindexed, const std::vector<int>& new_to_old) {
    VertexSet out;
    reindexed.for_each([&](int v) { out = out.with(new_to_old[static_cast<std::size_t>(v)]); });
    return out;
}

void for_each_k_subset(VertexSet base, int k, const std::function<void(VertexSet)>& fn) {
    std::vector<int> items = base.to_indices();
    int m = static_cast<int>(items.size());
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(VertexSet{});
        return;
    }
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s;
        for (int idx : pick) s = s.with(items[static_cast<std::size_t>(idx)]);
        fn(s);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Hypergraph k_shadow(const Hypergraph& h, int k) {
    if (k < 1 || k >= h.r())
        throw std::invalid_argument("k_shadow: need 1 <= k < r");
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges())
        for_each_k_subset(e, k, [&](VertexSet s) { edges.push_back(s); });
    return Hypergraph(h.n(), k, std::move(edges)); // ctor dedups
}

Hypergraph lift_common(const Hypergraph& h, int r_target) {
    if (r_target <= h.r())
        throw std::invalid_argument("lift_common: target uniformity must exceed r");
    int added = r_target - h.r();
    if (h.n() + added > VertexSet::capacity)
        throw std::invalid_argument("lift_common: vertex capacity exceeded");
    VertexSet fresh;
    for (int i = 0; i < added; ++i) fresh = fresh.with(h.n() + i);
    std::vector<VertexSet> edges;
    edges.reserve(h.edges().size());
    for (VertexSet e : h.edges()) edges.push_back(e | fresh);
    return Hypergraph(h.n() + added, r_target, std::move(edges));
}

} // namespace atrans
