#include "atrans/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace atrans {

namespace {

void check_profile(const Hypergraph& h, const Profile& p) {
    if (p.allowed().max() > h.r())
        throw std::invalid_argument("profile admits intersection size " +
                                    std::to_string(p.allowed().max()) +
                                    " but hypergraph is " + std::to_string(h.r()) +
                                    "-uniform");
}

struct Backtracker {
    const Hypergraph& h;
    const SizeSet& allowed;
    std::uint64_t forced;
    const std::function<bool(VertexSet)>& visit;

    std::vector<std::vector<int>> incident; // per vertex: edge ids
    std::vector<int> cnt;                   // chosen vertices per edge
    std::vector<int> und;                   // undecided vertices per edge
    bool stopped = false;

    Backtracker(const Hypergraph& hg, const SizeSet& a, VertexSet f,
                const std::function<bool(VertexSet)>& cb)
        : h(hg), allowed(a), forced(f.bits), visit(cb),
          incident(static_cast<std::size_t>(hg.n())),
          cnt(hg.edges().size(), 0), und(hg.edges().size(), 0) {
        for (std::size_t e = 0; e < h.edges().size(); ++e) {
            und[e] = h.r();
            h.edges()[e].for_each(
                [&](int v) { incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(e)); });
        }
    }

    bool feasible(int e) const {
        std::size_t i = static_cast<std::size_t>(e);
        return allowed.any_in(cnt[i], cnt[i] + und[i]);
    }

    // Decide vertices from the highest index down, exclusion branch first:
    // leaves come out in ascending mask order.
    void run(int v, std::uint64_t mask) {
        if (stopped) return;
        if (v < 0) {
            if (!visit(VertexSet(mask))) stopped = true;
            return;
        }
        const auto& inc = incident[static_cast<std::size_t>(v)];
        if (!((forced >> v) & 1u)) {
            bool ok = true;
            for (int e : inc) {
                --und[static_cast<std::size_t>(e)];
                if (!feasible(e)) ok = false;
            }
            if (ok) run(v - 1, mask);
            for (int e : inc) ++und[static_cast<std::size_t>(e)];
            if (stopped) return;
        }
        bool ok = true;
        for (int e : inc) {
            --und[static_cast<std::size_t>(e)];
            ++cnt[static_cast<std::size_t>(e)];
            if (!feasible(e)) ok = false;
        }
        if (ok) run(v - 1, mask | (std::uint64_t(1) << v));
        for (int e : inc) {
            ++und[static_cast<std::size_t>(e)];
            --cnt[static_cast<std::size_t>(e)];
        }
    }
};

// Union-find over vertices, merged along edges.
std::vector<VertexSet> connected_components(const Hypergraph& h) {
    std::vector<int> parent(static_cast<std::size_t>(h.n()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (VertexSet e : h.edges()) {
        int root = find(e.lowest());
        e.for_each([&](int v) { parent[static_cast<std::size_t>(find(v))] = root; });
    }
    std::vector<VertexSet> comp(static_cast<std::size_t>(h.n()));
    VertexSet cov = h.covered();
    cov.for_each([&](int v) {
        comp[static_cast<std::size_t>(find(v))] = comp[static_cast<std::size_t>(find(v))].with(v);
    });
    std::vector<VertexSet> out;
    for (VertexSet c : comp)
        if (!c.empty()) out.push_back(c);
    return out;
}

unsigned __int128 count_by_enumeration(const Hypergraph& h, const Profile& p) {
    unsigned __int128 total = 0;
    for_each_transversal(h, p, [&](VertexSet) {
        ++total;
        return true;
    });
    return total;
}

bool single_vertex_maximal(const Hypergraph& h, const Profile& p, VertexSet s) {
    for (int v = 0; v < h.n(); ++v) {
        if (s.contains(v)) continue;
        if (is_transversal(h, p, s.with(v))) return false;
    }
    return true;
}

} // namespace

TransversalQuery TransversalQuery::make(Hypergraph h, Profile p, Mode m) {
    check_profile(h, p);
    return TransversalQuery{std::move(h), std::move(p), m};
}

bool is_transversal(const Hypergraph& h, const Profile& p, VertexSet s) {
    if (!s.subset_of(h.vertices()))
        throw std::invalid_argument("is_transversal: set not within vertices");
    for (VertexSet e : h.edges())
        if (!p.contains((e & s).count())) return false;
    return true;
}

void for_each_transversal(const Hypergraph& h, const Profile& p,
                          const std::function<bool(VertexSet)>& visit, VertexSet forced) {
    check_profile(h, p);
    if (!forced.subset_of(h.vertices()))
        throw std::invalid_argument("for_each_transversal: forced set not within vertices");
    Backtracker bt(h, p.allowed(), forced, visit);
    bt.run(h.n() - 1, 0);
}

std::vector<VertexSet> enumerate_transversals(const Hypergraph& h, const Profile& p) {
    std::vector<VertexSet> out;
    for_each_transversal(h, p, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

CountResult count_transversals(const Hypergraph& h, const Profile& p,
                               std::size_t max_witnesses) {
    auto t0 = std::chrono::steady_clock::now();
    check_profile(h, p);
    CountResult res;
    if (max_witnesses > 0) {
        unsigned __int128 total = 0;
        for_each_transversal(h, p, [&](VertexSet s) {
            ++total;
            if (res.witnesses.size() < max_witnesses) res.witnesses.push_back(s);
            return true;
        });
        res.count = BigNat::from_u128(total);
    } else {
        BigNat total(1);
        for (VertexSet comp : connected_components(h)) {
            total *= BigNat::from_u128(
                count_by_enumeration(induced_subhypergraph(h, comp), p));
            if (total.is_zero()) break;
        }
        int iso = isolated_vertices(h).count();
        if (!total.is_zero() && iso > 0) total *= BigNat::pow2(static_cast<unsigned>(iso));
        res.count = std::move(total);
    }
    res.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return res;
}

bool is_maximal_transversal(const Hypergraph& h, const Profile& p, VertexSet s) {
    if (!is_transversal(h, p, s))
        throw std::invalid_argument("is_maximal_transversal: set is not a transversal");
    if (p.downward_closed()) return single_vertex_maximal(h, p, s);
    bool found_superset = false;
    for_each_transversal(h, p, [&](VertexSet t) {
        if (t != s) {
            found_superset = true;
            return false;
        }
        return true;
    }, s);
    return !found_superset;
}

std::vector<VertexSet> enumerate_maximal(const Hypergraph& h, const Profile& p) {
    std::vector<VertexSet> all = enumerate_transversals(h, p);
    std::vector<VertexSet> out;
    if (p.downward_closed()) {
        std::unordered_set<std::uint64_t> have;
        have.reserve(all.size() * 2);
        for (VertexSet s : all) have.insert(s.bits);
        for (VertexSet s : all) {
            bool maximal = true;
            for (int v = 0; v < h.n() && maximal; ++v)
                if (!s.contains(v) && have.count(s.with(v).bits)) maximal = false;
            if (maximal) out.push_back(s);
        }
    } else {
        for (VertexSet s : all)
            if (is_maximal_transversal(h, p, s)) out.push_back(s);
    }
    return out;
}

namespace {

// Shared machinery for the branching enumerator. Subproblems are traces: the
// active vertex mask plus the edge remainders that still lie inside it. A
// remainder of size <= 1 cannot pair two chosen vertices, so it is dropped;
// keeping the size-2 remainders is what preserves co-occurrence constraints
// of edges that stick out of the active set.
struct MsisTrace {
    std::uint64_t active = 0;
    std::vector<std::uint64_t> edges; // each inside active, size >= 2

    std::uint64_t neighborhood(int v) const {
        std::uint64_t nb = std::uint64_t(1) << v;
        for (std::uint64_t e : edges)
            if ((e >> v) & 1u) nb |= e;
        return nb;
    }

    bool strongly_independent(std::uint64_t s) const {
        for (std::uint64_t e : edges)
            if (std::popcount(e & s) > 1) return false;
        return true;
    }

    bool maximal(std::uint64_t s) const {
        for (std::uint64_t rest = active & ~s; rest; rest &= rest - 1) {
            std::uint64_t grown = s | (rest & (~rest + 1));
            if (strongly_independent(grown)) return false;
        }
        return true;
    }
};

// Exact set of maximal strongly independent sets of the trace. The branching
// sum visits every maximal set at least once (once per pivot-neighborhood
// member it contains) along with candidates that fail to stay independent or
// maximal; those are filtered at each level.
std::vector<std::uint64_t> msis_recurse(const MsisTrace& t) {
    if (t.active == 0) return {0};
    int pivot = -1, pivot_size = 65;
    for (std::uint64_t rest = t.active; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        int size = std::popcount(t.neighborhood(v));
        if (size < pivot_size) {
            pivot = v;
            pivot_size = size;
        }
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    for (std::uint64_t rest = t.neighborhood(pivot); rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        std::uint64_t removed = t.neighborhood(v);
        MsisTrace sub;
        sub.active = t.active & ~removed;
        for (std::uint64_t e : t.edges) {
            std::uint64_t clipped = e & ~removed;
            if (std::popcount(clipped) >= 2) sub.edges.push_back(clipped);
        }
        for (std::uint64_t reduced : msis_recurse(sub)) {
            std::uint64_t candidate = reduced | (std::uint64_t(1) << v);
            if (!seen.insert(candidate).second) continue;
            if (!t.strongly_independent(candidate)) continue;
            if (!t.maximal(candidate)) continue;
            out.push_back(candidate);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<VertexSet> enumerate_msis_branching(const Hypergraph& h) {
    if (h.r() != 3)
        throw std::invalid_argument("enumerate_msis_branching: hypergraph must be 3-uniform");
    MsisTrace root;
    root.active = h.vertices().bits;
    for (VertexSet e : h.edges()) root.edges.push_back(e.bits);
    std::vector<VertexSet> out;
    for (std::uint64_t s : msis_recurse(root)) out.push_back(VertexSet(s));
    std::sort(out.begin(), out.end());
    return out;
}

CountResult run_query(const TransversalQuery& q, std::size_t max_witnesses) {
    if (q.mode == Mode::all) return count_transversals(q.hypergraph, q.profile, max_witnesses);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VertexSet> sets = enumerate_maximal(q.hypergraph, q.profile);
    CountResult res;
    res.count = BigNat(sets.size());
    if (max_witnesses > 0) {
        sets.resize(std::min(sets.size(), max_witnesses));
        res.witnesses = std::move(sets);
    }
    res.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return res;
}

} // namespace atrans
