#include "atrans/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "atrans/bounds.hpp"
#include "atrans/constructions.hpp"
#include "atrans/engine.hpp"
#include "atrans/io.hpp"
#include "atrans/search.hpp"

namespace atrans {

int VerificationReport::passed() const {
    int c = 0;
    for (const auto& r : checks) c += r.pass;
    return c;
}

int VerificationReport::failed() const {
    return static_cast<int>(checks.size()) - passed();
}

namespace {

// ---- independent naive reference (kept separate from the engine path) ----

std::vector<std::uint64_t> naive_transversals(const Hypergraph& h, const Profile& p) {
    std::vector<std::uint64_t> out;
    const std::uint64_t subsets = std::uint64_t(1) << h.n();
    for (std::uint64_t s = 0; s < subsets; ++s) {
        bool ok = true;
        for (VertexSet e : h.edges())
            if (!p.contains(std::popcount(e.bits & s))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<std::uint64_t> naive_maximal(const Hypergraph& h, const Profile& p) {
    std::vector<std::uint64_t> all = naive_transversals(h, p);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s : all) {
        bool maximal = true;
        for (std::uint64_t t : all)
            if (t != s && (s & ~t) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    return out;
}

// ---- randomized instances -------------------------------------------------

std::vector<std::uint64_t> edge_slots(int n, int r) {
    std::vector<std::uint64_t> slots;
    for_each_k_subset(VertexSet::full(n), r, [&](VertexSet e) { slots.push_back(e.bits); });
    return slots;
}

Hypergraph random_host(std::mt19937_64& rng, int n, int r, bool no_isolated) {
    std::vector<std::uint64_t> slots = edge_slots(n, r);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::size_t want = std::uniform_int_distribution<std::size_t>(
            no_isolated ? std::min<std::size_t>(slots.size(), static_cast<std::size_t>(n / r + 1)) : 0,
            std::min<std::size_t>(slots.size(), 14))(rng);
        std::vector<std::uint64_t> pool = slots;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(want);
        std::uint64_t covered = 0;
        std::vector<VertexSet> edges;
        for (std::uint64_t e : pool) {
            edges.push_back(VertexSet(e));
            covered |= e;
        }
        if (no_isolated && covered != VertexSet::full(n).bits) continue;
        return Hypergraph(n, r, std::move(edges));
    }
    // dense fallback: guaranteed isolated-free
    Hypergraph packed = component_packing(r, n);
    return packed;
}

Profile random_profile(std::mt19937_64& rng, int r) {
    SizeSet s;
    while (s.empty()) {
        for (int v = 0; v <= r; ++v)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) s.add(v);
    }
    return Profile(s, r);
}

// ---- harness ---------------------------------------------------------------

struct Harness {
    VerificationReport& report;
    const FaultInjection* faults;

    Rational bound_g(long long n) const {
        Rational v = msis_bound(n);
        if (faults && faults->corrupt_msis_bound) v = v + Rational(std::uint64_t(1));
        return v;
    }

    template <class F>
    void check(const std::string& name, F&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult res;
        res.name = name;
        try {
            auto [expected, observed] = fn();
            res.expected = expected;
            res.observed = observed;
            res.pass = expected == observed;
        } catch (const std::exception& e) {
            res.expected = "no exception";
            res.observed = std::string("exception: ") + e.what();
            res.pass = false;
        }
        res.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        report.checks.push_back(std::move(res));
    }
};

using Str2 = std::pair<std::string, std::string>;

std::string u64s(std::uint64_t v) { return std::to_string(v); }

Profile profile_of(std::initializer_list<int> vs, int r) {
    return Profile(SizeSet::of(vs), r);
}

std::uint64_t engine_count(const Hypergraph& h, const Profile& p) {
    BigNat c = count_transversals(h, p).count;
    return c.fits_u64() ? c.as_u64() : ~std::uint64_t(0);
}

std::uint64_t engine_maximal_count(const Hypergraph& h, const Profile& p) {
    return enumerate_maximal(h, p).size();
}

// all seven non-empty profiles over r = 2
std::vector<Profile> graph_profiles() {
    return {profile_of({0}, 2),    profile_of({1}, 2),    profile_of({2}, 2),
            profile_of({0, 1}, 2), profile_of({1, 2}, 2), profile_of({0, 2}, 2),
            profile_of({0, 1, 2}, 2)};
}

void add_quick_checks(Harness& h) {
    // formula spot values
    const std::pair<int, std::string> mm_cases[] = {{3, "3"}, {4, "4"}, {5, "6"}, {6, "9"}};
    for (auto [n, want] : mm_cases)
        h.check("mm_n" + std::to_string(n), [=]() -> Str2 {
            return {want, moon_moser(n).to_string()};
        });

    const std::pair<int, std::string> g_cases[] = {{5, "16/3"}, {6, "9"},   {7, "12"},
                                                   {8, "16"},   {9, "27"},  {10, "36"},
                                                   {11, "48"},  {12, "81"}};
    for (auto [n, want] : g_cases)
        h.check("g_n" + std::to_string(n), [=, &h]() -> Str2 {
            return {want, h.bound_g(n).to_string()};
        });

    h.check("g_triple_recurrence", [&h]() -> Str2 {
        for (int n = 3; n <= 60; ++n)
            if (!(Rational(std::uint64_t(3)) * h.bound_g(n - 3) == h.bound_g(n)))
                return {"ok", "3*g(n-3) != g(n) at n=" + std::to_string(n)};
        return {"ok", "ok"};
    });

    h.check("g_branch_inequality", [&h]() -> Str2 {
        for (int n = 3; n <= 60; ++n)
            for (int d = 3; d <= n; ++d)
                if (Rational(static_cast<std::uint64_t>(d)) * h.bound_g(n - d) > h.bound_g(n))
                    return {"ok", "d*g(n-d) > g(n) at n=" + std::to_string(n) +
                                      " d=" + std::to_string(d)};
        return {"ok", "ok"};
    });

    // sharp hosts for the strong-independence bound
    for (int n = 6; n <= 12; ++n)
        h.check("msis_extremal_n" + std::to_string(n), [n, &h]() -> Str2 {
            Profile strong = profile_of({0, 1}, 3);
            std::uint64_t measured = engine_maximal_count(msis_extremal(n), strong);
            return {h.bound_g(n).to_string(), u64s(measured)};
        });

    h.check("k43_msis", []() -> Str2 {
        std::uint64_t c = engine_maximal_count(complete_hypergraph(4, 3), profile_of({0, 1}, 3));
        return {"4", u64s(c)};
    });

    // construction counts against closed forms
    h.check("star_strong_counts", []() -> Str2 {
        for (int n = 2; n <= 8; ++n) {
            BigNat want = BigNat(1) + BigNat::pow2(static_cast<unsigned>(n - 1));
            if (!(count_transversals(star(n), profile_of({0, 1}, 2)).count == want))
                return {"ok", "star mismatch at n=" + std::to_string(n)};
        }
        return {"ok", "ok"};
    });

    h.check("star_duality_n5", []() -> Str2 {
        return {"17", u64s(engine_count(star(5), profile_of({1, 2}, 2)))};
    });

    h.check("matching_one_counts", []() -> Str2 {
        for (int n = 2; n <= 9; ++n) {
            // odd n leaves one vertex uncovered, which doubles the count
            BigNat want = BigNat::pow2(static_cast<unsigned>(n / 2 + n % 2));
            if (!(count_transversals(matching(n, 2), profile_of({1}, 2)).count == want))
                return {"ok", "matching mismatch at n=" + std::to_string(n)};
        }
        return {"ok", "ok"};
    });

    h.check("packing_zero_r_counts", []() -> Str2 {
        for (int r = 2; r <= 3; ++r)
            for (int n = r; n <= r + 5; ++n) {
                Profile p = profile_of({0, r}, r);
                BigNat want = BigNat::pow2(static_cast<unsigned>(n / r));
                if (!(count_transversals(component_packing(r, n), p).count == want))
                    return {"ok", "packing mismatch at r=" + std::to_string(r) +
                                      " n=" + std::to_string(n)};
            }
        return {"ok", "ok"};
    });

    for (int r = 2; r <= 3; ++r)
        h.check("parity_construction_r" + std::to_string(r), [r]() -> Str2 {
            for (int n = r; n <= r + 5; ++n) {
                BigNat want = parity_bound(r, n);
                Profile even = Profile::parse("even", r), odd = Profile::parse("odd", r);
                Hypergraph host = parity_overlap(r, n);
                if (!(count_transversals(host, even).count == want))
                    return {"ok", "even mismatch at n=" + std::to_string(n)};
                if (!(count_transversals(host, odd).count == want))
                    return {"ok", "odd mismatch at n=" + std::to_string(n)};
            }
            return {"ok", "ok"};
        });

    h.check("sunflower_strong_r3_n14", []() -> Str2 {
        Profile strong = profile_of({0, 1}, 3);
        ExponentChoice c = best_exponent(strong, 3);
        int blocks = (14 - 6 + c.p) / c.p;
        BigNat floor_bound = c.f.pow(static_cast<unsigned>(blocks));
        BigNat measured = count_transversals(sunflower(strong, 3, 14), strong).count;
        if (measured < BigNat(243)) return {"ok", "below 243"};
        if (measured < floor_bound) return {"ok", "below f^blocks"};
        return {"ok", "ok"};
    });

    h.check("sunflower_one_r2_n8", []() -> Str2 {
        Profile p = profile_of({1}, 2);
        BigNat measured = count_transversals(sunflower(p, 2, 8), p).count;
        return measured < BigNat(8) ? Str2{"ok", "below 2^3"} : Str2{"ok", "ok"};
    });

    h.check("exponent_spots", []() -> Str2 {
        std::ostringstream got;
        got << best_exponent(profile_of({1}, 2), 2).to_string() << "; "
            << best_exponent(profile_of({0, 1}, 3), 3).to_string() << "; "
            << best_exponent(profile_of({0, 3}, 3), 3).to_string() << "; "
            << best_exponent(profile_of({0, 1, 2}, 2), 2).to_string();
        return {"p=2 i=0 f=2; p=1 i=0 f=2; p=3 i=0 f=2; p=1 i=0 f=2", got.str()};
    });

    h.check("f_and_shift_spots", []() -> Str2 {
        std::ostringstream got;
        got << f_value(3, 0, profile_of({0, 1}, 3)).to_string() << ","
            << f_value(2, 0, profile_of({0, 1}, 3)).to_string() << ","
            << f_value(2, 1, profile_of({0, 1}, 3)).to_string() << ";"
            << shift_profile(profile_of({0, 1}, 3), 1).to_string() << ";"
            << shift_profile(profile_of({0, 3}, 3), 2).to_string();
        return {"4,3,1;0;1", got.str()};
    });

    h.check("parity_bound_spots", []() -> Str2 {
        std::ostringstream got;
        got << parity_bound(3, 6).to_string() << "," << parity_bound(3, 5).to_string() << ","
            << parity_bound(2, 4).to_string();
        return {"16,8,4", got.str()};
    });

    h.check("elementary_spots", []() -> Str2 {
        std::ostringstream got;
        got << elementary_value(ElementaryCase::single_zero, 3, 9).value->to_string() << ","
            << elementary_value(ElementaryCase::full_range, 3, 5).value->to_string() << ","
            << elementary_value(ElementaryCase::zero_or_r, 3, 7).value->to_string();
        return {"1,32,4", got.str()};
    });

    h.check("table_formula_spots", []() -> Str2 {
        std::ostringstream got;
        got << graph_table_value(profile_of({1}, 2), 6, GraphStat::all_transversals)->to_string()
            << ","
            << graph_table_value(profile_of({0, 1}, 2), 5, GraphStat::all_transversals)
                   ->to_string()
            << ","
            << graph_table_value(profile_of({0, 2}, 2), 7, GraphStat::maximal_transversals)
                   ->to_string()
            << ","
            << graph_table_value(profile_of({0, 1}, 2), 9, GraphStat::maximal_transversals)
                   ->to_string();
        return {"8,17,1,27", got.str()};
    });

    h.check("cross_power_inequality", []() -> Str2 {
        for (int r = 2; r <= 4; ++r) {
            std::vector<Profile> profiles;
            for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << (r + 1)); ++bits) {
                SizeSet s;
                for (int v = 0; v <= r; ++v)
                    if ((bits >> v) & 1u) s.add(v);
                profiles.emplace_back(s, r);
            }
            for (const Profile& p : profiles) {
                ExponentChoice c = best_exponent(p, r);
                for (int q = 1; q <= r; ++q)
                    for (int i = 0; i + q <= r; ++i) {
                        BigNat lhs = f_value(q, i, p).pow(static_cast<unsigned>(c.p));
                        BigNat rhs = c.f.pow(static_cast<unsigned>(q));
                        if (lhs > rhs)
                            return {"ok", "violated for profile " + p.to_string() +
                                              " r=" + std::to_string(r) +
                                              " q=" + std::to_string(q) +
                                              " i=" + std::to_string(i)};
                    }
            }
        }
        return {"ok", "ok"};
    });

    // randomized cross checks (fixed seeds)
    h.check("engine_vs_naive_random", []() -> Str2 {
        std::mt19937_64 rng(20240601);
        for (int t = 0; t < 100; ++t) {
            int r = 2 + (t % 2), n = std::uniform_int_distribution<int>(r, 10)(rng);
            Hypergraph host = random_host(rng, n, r, false);
            Profile p = random_profile(rng, r);
            std::vector<std::uint64_t> got;
            for (VertexSet s : enumerate_transversals(host, p)) got.push_back(s.bits);
            if (got != naive_transversals(host, p))
                return {"ok", "mismatch on case " + std::to_string(t)};
            got.clear();
            for (VertexSet s : enumerate_maximal(host, p)) got.push_back(s.bits);
            if (got != naive_maximal(host, p))
                return {"ok", "maximal mismatch on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("branching_vs_maximal_random", []() -> Str2 {
        std::mt19937_64 rng(20240602);
        for (int t = 0; t < 100; ++t) {
            int n = std::uniform_int_distribution<int>(3, 10)(rng);
            Hypergraph host = random_host(rng, n, 3, false);
            std::vector<VertexSet> a = enumerate_msis_branching(host);
            std::vector<VertexSet> b = enumerate_maximal(host, profile_of({0, 1}, 3));
            if (a != b) return {"ok", "mismatch on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("duality_random", []() -> Str2 {
        std::mt19937_64 rng(20240603);
        for (int t = 0; t < 100; ++t) {
            int r = 2 + (t % 2), n = std::uniform_int_distribution<int>(r, 10)(rng);
            Hypergraph host = random_host(rng, n, r, false);
            Profile p = random_profile(rng, r);
            if (!(count_transversals(host, p).count ==
                  count_transversals(host, p.complement()).count))
                return {"ok", "mismatch on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("singleton_maximal_random", []() -> Str2 {
        std::mt19937_64 rng(20240604);
        for (int t = 0; t < 100; ++t) {
            int r = 2 + (t % 2), n = std::uniform_int_distribution<int>(r, 9)(rng);
            Hypergraph host = random_host(rng, n, r, true);
            int a = std::uniform_int_distribution<int>(0, r)(rng);
            SizeSet s;
            s.add(a);
            Profile p(s, r);
            if (enumerate_maximal(host, p) != enumerate_transversals(host, p))
                return {"ok", "mismatch on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("shadow_monotone_random", []() -> Str2 {
        std::mt19937_64 rng(20240605);
        for (int t = 0; t < 100; ++t) {
            int n = std::uniform_int_distribution<int>(3, 10)(rng);
            Hypergraph host = random_host(rng, n, 3, false);
            Hypergraph shadow = k_shadow(host, 2);
            int a = 1 + (t % 2);
            Profile up = Profile(SizeSet::range(0, a), 3);
            Profile down = Profile(SizeSet::range(0, std::min(a, 2)), 2);
            std::vector<std::uint64_t> in_host, in_shadow;
            for (VertexSet s : enumerate_transversals(host, up)) in_host.push_back(s.bits);
            for (VertexSet s : enumerate_transversals(shadow, down)) in_shadow.push_back(s.bits);
            if (!std::includes(in_shadow.begin(), in_shadow.end(), in_host.begin(),
                               in_host.end()))
                return {"ok", "inclusion fails on case " + std::to_string(t)};
            if (in_host.size() > in_shadow.size())
                return {"ok", "count fails on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("lift_maximal_monotone_random", []() -> Str2 {
        std::mt19937_64 rng(20240606);
        for (int t = 0; t < 100; ++t) {
            int n = std::uniform_int_distribution<int>(2, 9)(rng);
            Hypergraph base = random_host(rng, n, 2, false);
            Hypergraph lifted = lift_common(base, 3);
            std::uint64_t hb = engine_maximal_count(base, profile_of({0, 1}, 2));
            std::uint64_t hl = engine_maximal_count(lifted, profile_of({0, 1}, 3));
            if (hl < hb) return {"ok", "monotonicity fails on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("all_profile_count_random", []() -> Str2 {
        std::mt19937_64 rng(20240607);
        for (int t = 0; t < 100; ++t) {
            int r = 2 + (t % 2), n = std::uniform_int_distribution<int>(r, 10)(rng);
            Hypergraph host = random_host(rng, n, r, false);
            if (!(count_transversals(host, Profile::parse("all", r)).count ==
                  BigNat::pow2(static_cast<unsigned>(n))))
                return {"ok", "mismatch on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("component_product_random", []() -> Str2 {
        std::mt19937_64 rng(20240608);
        for (int t = 0; t < 100; ++t) {
            int r = 2 + (t % 2), n = std::uniform_int_distribution<int>(r, 10)(rng);
            Hypergraph host = random_host(rng, n, r, false);
            Profile p = random_profile(rng, r);
            BigNat product = count_transversals(host, p).count;
            BigNat direct(enumerate_transversals(host, p).size());
            if (!(product == direct)) return {"ok", "mismatch on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    h.check("roundtrip_random", []() -> Str2 {
        std::mt19937_64 rng(20240609);
        for (int t = 0; t < 100; ++t) {
            int r = 2 + (t % 2), n = std::uniform_int_distribution<int>(r, 10)(rng);
            Hypergraph host = random_host(rng, n, r, false);
            if (!(parse_hypergraph(serialize_hypergraph(host)) == host))
                return {"ok", "round trip fails on case " + std::to_string(t)};
        }
        return {"ok", "ok"};
    });

    // exhaustive sweeps small enough for the quick level
    h.check("graph_g_row_n2_5", []() -> Str2 {
        for (int n = 2; n <= 5; ++n)
            for (const Profile& p : graph_profiles()) {
                SearchReport rep = max_transversal_count(SearchSpace{n, 2, true, false}, p,
                                                         Mode::all);
                Rational want = *graph_table_value(p, n, GraphStat::all_transversals);
                if (!(want == Rational(BigNat(rep.maximum))))
                    return {"ok", "mismatch at n=" + std::to_string(n) + " profile " +
                                      p.to_string()};
            }
        return {"ok", "ok"};
    });

    h.check("graph_h_row_n2_5", []() -> Str2 {
        for (int n = 2; n <= 5; ++n)
            for (const Profile& p : graph_profiles()) {
                SearchReport rep = max_transversal_count(SearchSpace{n, 2, false, false}, p,
                                                         Mode::maximal);
                Rational want = *graph_table_value(p, n, GraphStat::maximal_transversals);
                if (!(want == Rational(BigNat(rep.maximum))))
                    return {"ok", "mismatch at n=" + std::to_string(n) + " profile " +
                                      p.to_string()};
            }
        return {"ok", "ok"};
    });

    h.check("msis_exhaustive_n3_4", [&h]() -> Str2 {
        Profile strong = profile_of({0, 1}, 3);
        std::ostringstream got;
        for (int n = 3; n <= 4; ++n) {
            SearchReport rep = max_transversal_count(SearchSpace{n, 3, false, false}, strong,
                                                     Mode::maximal);
            if (Rational(BigNat(rep.maximum)) > h.bound_g(n))
                return {"3,4", "bound violated at n=" + std::to_string(n)};
            if (n > 3) got << ",";
            got << rep.maximum;
        }
        return {"3,4", got.str()};
    });

    h.check("msis_exhaustive_n5", [&h]() -> Str2 {
        Profile strong = profile_of({0, 1}, 3);
        SearchReport rep =
            max_transversal_count(SearchSpace{5, 3, false, false}, strong, Mode::maximal);
        BigNat cap = h.bound_g(5).floor();
        if (BigNat(rep.maximum) > cap)
            return {"within cap " + cap.to_string(), "exceeds with " + u64s(rep.maximum)};
        // the closed form only caps this at floor(16/3) = 5; the sweep pins
        // the exact value, frozen here as discovered data
        return {"5", u64s(rep.maximum)};
    });

    h.check("zero_r_exhaustive_small", []() -> Str2 {
        for (int n = 3; n <= 5; ++n) {
            SearchReport rep = max_transversal_count(SearchSpace{n, 3, true, false},
                                                     profile_of({0, 3}, 3), Mode::all);
            if (rep.maximum != (std::uint64_t(1) << (n / 3)))
                return {"ok", "mismatch at n=" + std::to_string(n)};
        }
        return {"ok", "ok"};
    });
}

void add_full_checks(Harness& h) {
    h.check("g3_msis_n6", [&h]() -> Str2 {
        Profile strong = profile_of({0, 1}, 3);
        SearchReport rep =
            max_transversal_count(SearchSpace{6, 3, false, false}, strong, Mode::maximal);
        if (Rational(BigNat(rep.maximum)) > h.bound_g(6))
            return {"9", "bound violated: " + u64s(rep.maximum)};
        return {"9", u64s(rep.maximum)};
    });

    h.check("graph_g_row_n6", []() -> Str2 {
        for (const Profile& p : graph_profiles()) {
            SearchReport rep =
                max_transversal_count(SearchSpace{6, 2, true, false}, p, Mode::all);
            Rational want = *graph_table_value(p, 6, GraphStat::all_transversals);
            if (!(want == Rational(BigNat(rep.maximum))))
                return {"ok", "mismatch for profile " + p.to_string()};
        }
        return {"ok", "ok"};
    });

    h.check("graph_h_row_n6", []() -> Str2 {
        for (const Profile& p : graph_profiles()) {
            SearchReport rep =
                max_transversal_count(SearchSpace{6, 2, false, false}, p, Mode::maximal);
            Rational want = *graph_table_value(p, 6, GraphStat::maximal_transversals);
            if (!(want == Rational(BigNat(rep.maximum))))
                return {"ok", "mismatch for profile " + p.to_string()};
        }
        return {"ok", "ok"};
    });

    h.check("parity_exhaustive_r3", []() -> Str2 {
        for (int n = 3; n <= 6; ++n) {
            BigNat want = parity_bound(3, n);
            for (const char* side : {"even", "odd"}) {
                SearchReport rep = max_transversal_count(SearchSpace{n, 3, true, false},
                                                         Profile::parse(side, 3), Mode::all);
                if (!(BigNat(rep.maximum) == want))
                    return {"ok", std::string(side) + " mismatch at n=" + std::to_string(n)};
            }
        }
        return {"ok", "ok"};
    });

    h.check("zero_r_exhaustive_n6", []() -> Str2 {
        SearchReport rep = max_transversal_count(SearchSpace{6, 3, true, false},
                                                 profile_of({0, 3}, 3), Mode::all);
        return {"4", u64s(rep.maximum)};
    });
}

} // namespace

VerificationReport run_verification(VerifyLevel level, const FaultInjection* faults) {
    VerificationReport report;
    Harness h{report, faults};
    add_quick_checks(h);
    if (level == VerifyLevel::full) add_full_checks(h);
    return report;
}

} // namespace atrans
