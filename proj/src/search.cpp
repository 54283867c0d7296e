#include "atrans/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace atrans {

namespace {

constexpr int max_labeled_edge_slots = 24;
constexpr int max_iso_vertices = 8;
constexpr int max_canonical_vertices = 10;

std::vector<std::uint64_t> all_edge_masks(int n, int r) {
    std::vector<std::uint64_t> masks;
    for_each_k_subset(VertexSet::full(n), r, [&](VertexSet e) { masks.push_back(e.bits); });
    std::sort(masks.begin(), masks.end());
    return masks;
}

// C(n, k), saturating at `cap`
std::uint64_t binom_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 res = 1;
    for (int j = 1; j <= k; ++j) {
        res = res * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
        if (res > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(res);
}

void check_space(const SearchSpace& s) {
    if (s.n < 0 || s.n > VertexSet::capacity || s.r < 1)
        throw std::invalid_argument("search: bad dimensions");
    if (s.no_isolated && s.n < s.r)
        throw std::invalid_argument("search: no-isolated hosts need n >= r");
    if (s.iso_reduce) {
        if (s.n > max_iso_vertices)
            throw std::invalid_argument("search: isomorphism-reduced sweep capped at n <= 8");
    } else {
        std::uint64_t slots = binom_capped(s.n, s.r, max_labeled_edge_slots);
        if (slots > max_labeled_edge_slots)
            throw std::invalid_argument(
                "search: labeled sweep capped at C(n,r) <= 24 edge slots");
    }
}

// ---- per-host evaluation ------------------------------------------------
//
// Direct 2^n sweep, independent of the engine's backtracker: transversal
// flags per subset, then for the maximal mode a superset-OR transform so
// inclusion-maximality is exact for arbitrary profiles.

struct EvalScratch {
    std::vector<std::uint8_t> flag, reach;
};

std::uint64_t eval_host(const std::uint64_t* edges, int m, int n, std::uint64_t allowed_sizes,
                        Mode mode, EvalScratch& scratch) {
    const std::uint64_t subsets = std::uint64_t(1) << n;
    if (mode == Mode::all) {
        std::uint64_t count = 0;
        for (std::uint64_t s = 0; s < subsets; ++s) {
            bool ok = true;
            for (int e = 0; e < m; ++e) {
                if (!((allowed_sizes >> std::popcount(edges[e] & s)) & 1u)) {
                    ok = false;
                    break;
                }
            }
            count += ok;
        }
        return count;
    }
    auto& flag = scratch.flag;
    auto& reach = scratch.reach;
    if (flag.size() < subsets) {
        flag.resize(subsets);
        reach.resize(subsets);
    }
    for (std::uint64_t s = 0; s < subsets; ++s) {
        bool ok = true;
        for (int e = 0; e < m; ++e) {
            if (!((allowed_sizes >> std::popcount(edges[e] & s)) & 1u)) {
                ok = false;
                break;
            }
        }
        flag[s] = ok;
        reach[s] = ok;
    }
    // reach[s] = some superset of s (including s) is a transversal
    for (int b = 0; b < n; ++b) {
        const std::uint64_t bit = std::uint64_t(1) << b;
        for (std::uint64_t s = 0; s < subsets; ++s)
            if (!(s & bit)) reach[s] |= reach[s | bit];
    }
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        if (!flag[s]) continue;
        bool maximal = true;
        for (int b = 0; b < n && maximal; ++b) {
            const std::uint64_t bit = std::uint64_t(1) << b;
            if (!(s & bit) && reach[s | bit]) maximal = false;
        }
        count += maximal;
    }
    return count;
}

std::uint64_t allowed_mask_u64(const Profile& p) {
    std::uint64_t mask = 0;
    for (int v : p.allowed().values())
        if (v < 64) mask |= std::uint64_t(1) << v;
    return mask;
}

struct BlockResult {
    bool any = false;
    std::uint64_t best = 0;
    std::uint64_t best_index = 0;
    std::uint64_t explored = 0;
};

// Labeled sweep over edge-subset indices [lo, hi).
BlockResult scan_block(const std::vector<std::uint64_t>& slots, const SearchSpace& space,
                       std::uint64_t allowed_sizes, Mode mode, std::uint64_t lo,
                       std::uint64_t hi) {
    BlockResult out;
    EvalScratch scratch;
    const std::uint64_t full = VertexSet::full(space.n).bits;
    std::vector<std::uint64_t> edges(slots.size());
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        int m = 0;
        std::uint64_t covered = 0;
        for (std::uint64_t rest = idx; rest; rest &= rest - 1) {
            std::uint64_t e = slots[static_cast<std::size_t>(std::countr_zero(rest))];
            edges[static_cast<std::size_t>(m++)] = e;
            covered |= e;
        }
        if (space.no_isolated && covered != full) continue;
        std::uint64_t c = eval_host(edges.data(), m, space.n, allowed_sizes, mode, scratch);
        ++out.explored;
        if (!out.any || c > out.best) {
            out.any = true;
            out.best = c;
            out.best_index = idx;
        }
    }
    return out;
}

// ---- isomorphism machinery ----------------------------------------------

void permuted_sorted(const std::vector<std::uint64_t>& edges, const std::vector<int>& perm,
                     std::vector<std::uint64_t>& out) {
    out.clear();
    for (std::uint64_t e : edges) {
        std::uint64_t mapped = 0;
        for (std::uint64_t rest = e; rest; rest &= rest - 1)
            mapped |= std::uint64_t(1) << perm[static_cast<std::size_t>(std::countr_zero(rest))];
        out.push_back(mapped);
    }
    std::sort(out.begin(), out.end());
}

// Is this (ascending) edge list the lexicographically least labeling of its
// isomorphism class?
bool is_lex_min(const std::vector<std::uint64_t>& edges, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> mapped;
    mapped.reserve(edges.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
        permuted_sorted(edges, perm, mapped);
        if (std::lexicographical_compare(mapped.begin(), mapped.end(), edges.begin(),
                                         edges.end()))
            return false;
    }
    return true;
}

struct IsoDfs {
    const SearchSpace& space;
    const std::vector<std::uint64_t>& slots;
    std::uint64_t allowed_sizes;
    Mode mode;
    std::uint64_t full;
    EvalScratch scratch;

    IsoDfs(const SearchSpace& sp, const std::vector<std::uint64_t>& sl,
           std::uint64_t sizes, Mode md)
        : space(sp), slots(sl), allowed_sizes(sizes), mode(md),
          full(VertexSet::full(sp.n).bits) {}

    bool any = false;
    std::uint64_t best = 0;
    std::vector<std::uint64_t> best_edges;
    std::uint64_t explored = 0;
    const std::function<void(const Hypergraph&)>* emit = nullptr;

    void consider(std::vector<std::uint64_t>& edges) {
        std::uint64_t covered = 0;
        for (std::uint64_t e : edges) covered |= e;
        if (space.no_isolated && covered != full) return;
        ++explored;
        if (emit) {
            std::vector<VertexSet> vs;
            vs.reserve(edges.size());
            for (std::uint64_t e : edges) vs.push_back(VertexSet(e));
            (*emit)(Hypergraph(space.n, space.r, std::move(vs)));
            return;
        }
        std::uint64_t c = eval_host(edges.data(), static_cast<int>(edges.size()), space.n,
                                    allowed_sizes, mode, scratch);
        if (!any || c > best) {
            any = true;
            best = c;
            best_edges = edges;
        }
    }

    void walk(std::vector<std::uint64_t>& edges, std::size_t next_slot) {
        consider(edges);
        for (std::size_t j = next_slot; j < slots.size(); ++j) {
            edges.push_back(slots[j]);
            if (is_lex_min(edges, space.n)) walk(edges, j + 1);
            edges.pop_back();
        }
    }
};

Hypergraph host_from_index(const SearchSpace& space, const std::vector<std::uint64_t>& slots,
                           std::uint64_t idx) {
    std::vector<VertexSet> edges;
    for (std::uint64_t rest = idx; rest; rest &= rest - 1)
        edges.push_back(VertexSet(slots[static_cast<std::size_t>(std::countr_zero(rest))]));
    return Hypergraph(space.n, space.r, std::move(edges));
}

} // namespace

void for_each_hypergraph(const SearchSpace& space,
                         const std::function<void(const Hypergraph&)>& visit) {
    check_space(space);
    std::vector<std::uint64_t> slots = all_edge_masks(space.n, space.r);
    if (space.iso_reduce) {
        IsoDfs dfs(space, slots, 0, Mode::all);
        dfs.emit = &visit;
        std::vector<std::uint64_t> edges;
        dfs.walk(edges, 0);
        return;
    }
    const std::uint64_t full = VertexSet::full(space.n).bits;
    const std::uint64_t total = std::uint64_t(1) << slots.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<VertexSet> edges;
        std::uint64_t covered = 0;
        for (std::uint64_t rest = idx; rest; rest &= rest - 1) {
            std::uint64_t e = slots[static_cast<std::size_t>(std::countr_zero(rest))];
            edges.push_back(VertexSet(e));
            covered |= e;
        }
        if (space.no_isolated && covered != full) continue;
        visit(Hypergraph(space.n, space.r, std::move(edges)));
    }
}

std::string canonical_form(const Hypergraph& h) {
    if (h.n() > max_canonical_vertices)
        throw std::invalid_argument("canonical_form: permutation scan capped at n <= 10");
    std::vector<std::uint64_t> edges;
    edges.reserve(h.edges().size());
    for (VertexSet e : h.edges()) edges.push_back(e.bits);
    std::vector<int> perm(static_cast<std::size_t>(h.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best = edges, mapped;
    while (std::next_permutation(perm.begin(), perm.end())) {
        permuted_sorted(edges, perm, mapped);
        if (std::lexicographical_compare(mapped.begin(), mapped.end(), best.begin(),
                                         best.end()))
            best = mapped;
    }
    std::string bytes;
    bytes.reserve(2 + best.size() * 8);
    bytes.push_back(static_cast<char>(h.n()));
    bytes.push_back(static_cast<char>(h.r()));
    for (std::uint64_t e : best)
        for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<char>((e >> (8 * b)) & 0xff));
    return bytes;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.n() != b.n() || a.r() != b.r() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

SearchReport max_transversal_count(const SearchSpace& space, const Profile& p, Mode mode,
                                   int workers) {
    auto t0 = std::chrono::steady_clock::now();
    check_space(space);
    if (p.allowed().max() > space.r)
        throw std::invalid_argument("search: profile exceeds uniformity");
    if (workers < 1) workers = 1;

    std::vector<std::uint64_t> slots = all_edge_masks(space.n, space.r);
    std::uint64_t allowed_sizes = allowed_mask_u64(p);

    SearchReport report;
    report.space = space;
    report.mode = mode;
    report.profile = p.to_string();

    if (space.iso_reduce) {
        IsoDfs dfs(space, slots, allowed_sizes, mode);
        std::vector<std::uint64_t> edges;
        dfs.walk(edges, 0);
        if (!dfs.any) throw std::logic_error("search: empty domain");
        report.maximum = dfs.best;
        report.explored = dfs.explored;
        std::vector<VertexSet> vs;
        for (std::uint64_t e : dfs.best_edges) vs.push_back(VertexSet(e));
        report.witness = Hypergraph(space.n, space.r, std::move(vs));
    } else {
        const std::uint64_t total = std::uint64_t(1) << slots.size();
        int nblocks = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
        std::vector<BlockResult> results(static_cast<std::size_t>(nblocks));
        std::vector<std::thread> pool;
        std::uint64_t step = (total + static_cast<std::uint64_t>(nblocks) - 1) /
                             static_cast<std::uint64_t>(nblocks);
        for (int w = 0; w < nblocks; ++w) {
            std::uint64_t lo = static_cast<std::uint64_t>(w) * step;
            std::uint64_t hi = std::min<std::uint64_t>(lo + step, total);
            pool.emplace_back([&, w, lo, hi] {
                results[static_cast<std::size_t>(w)] =
                    scan_block(slots, space, allowed_sizes, mode, lo, hi);
            });
        }
        for (auto& t : pool) t.join();
        BlockResult merged;
        for (const BlockResult& r : results) {
            merged.explored += r.explored;
            if (!r.any) continue;
            if (!merged.any || r.best > merged.best ||
                (r.best == merged.best && r.best_index < merged.best_index)) {
                merged.any = true;
                merged.best = r.best;
                merged.best_index = r.best_index;
            }
        }
        if (!merged.any) throw std::logic_error("search: empty domain");
        report.maximum = merged.best;
        report.explored = merged.explored;
        report.witness = host_from_index(space, slots, merged.best_index);
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

std::vector<SearchReport> scan_range(int r, int n_lo, int n_hi, const Profile& p, Mode mode,
                                     bool no_isolated, bool iso_reduce, int workers) {
    std::vector<SearchReport> out;
    for (int n = n_lo; n <= n_hi; ++n)
        out.push_back(max_transversal_count(SearchSpace{n, r, no_isolated, iso_reduce}, p,
                                            mode, workers));
    return out;
}

} // namespace atrans
