#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "atrans/error.hpp"
#include "atrans/hypergraph.hpp"
#include "atrans/io.hpp"
#include "atrans/profile.hpp"
#include "oracle.hpp"

using namespace atrans;

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({0, 2, 5});
    CHECK(s.count() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.lowest() == 0);
    CHECK(s.with(1).count() == 4);
    CHECK(s.without(5) == VertexSet::of({0, 2}));
    CHECK((s | VertexSet::of({1})) == VertexSet::of({0, 1, 2, 5}));
    CHECK((s & VertexSet::of({2, 5, 7})) == VertexSet::of({2, 5}));
    CHECK((s - VertexSet::of({0})) == VertexSet::of({2, 5}));
    CHECK(VertexSet::of({0, 2}).subset_of(s));
    CHECK(!s.subset_of(VertexSet::of({0, 2})));
    CHECK(VertexSet::full(3).bits == 7);
    CHECK(VertexSet::full(64).bits == ~std::uint64_t(0));
    CHECK(s.to_indices() == std::vector<int>{0, 2, 5});
    // numeric mask order, lowest index in the least significant bit
    CHECK(VertexSet::of({0, 1}) < VertexSet::of({2}));
}

TEST_CASE("profile parsing and validation") {
    Profile p = Profile::parse("0,1", 3);
    CHECK(p.to_string() == "0,1");
    CHECK(p.contains(0));
    CHECK(p.contains(1));
    CHECK(!p.contains(2));
    CHECK(p.downward_closed());

    CHECK(Profile::parse("strong", 5).to_string() == "0,1");
    CHECK(Profile::parse("independent", 3).to_string() == "0,1,2");
    CHECK(Profile::parse("all", 3).to_string() == "0,1,2,3");
    CHECK(Profile::parse("even", 3).to_string() == "0,2");
    CHECK(Profile::parse("odd", 3).to_string() == "1,3");
    CHECK(Profile::parse("odd", 2).to_string() == "1");
    CHECK(Profile::parse(" 2 , 0 ", 2).to_string() == "0,2");

    CHECK(!Profile::parse("0,2", 2).downward_closed());
    CHECK(Profile::parse("0,2", 2).complement().to_string() == "0,2");
    CHECK(Profile::parse("0,1", 3).complement().to_string() == "2,3");

    CHECK_THROWS_AS(Profile::parse("", 3), ParseError);
    CHECK_THROWS_AS(Profile::parse("0,,1", 3), ParseError);
    CHECK_THROWS_AS(Profile::parse("4", 3), ParseError);
    CHECK_THROWS_AS(Profile::parse("-1", 3), ParseError);
    CHECK_THROWS_AS(Profile::parse("x", 3), ParseError);
    CHECK_THROWS_AS(Profile(SizeSet{}, 3), std::invalid_argument);
}

TEST_CASE("size set shifting") {
    CHECK(shift_profile(Profile::parse("0,1", 3), 0).to_string() == "0,1");
    CHECK(shift_profile(Profile::parse("0,1", 3), 1).to_string() == "0");
    CHECK(shift_profile(Profile::parse("0,3", 3), 2).to_string() == "1");
    CHECK(shift_profile(Profile::parse("0,1", 3), 2).empty());
    CHECK(shift_profile(Profile::parse("0,1", 3), 200).empty());
    SizeSet s = SizeSet::of({1, 3});
    CHECK(s.any_in(0, 1));
    CHECK(!s.any_in(4, 9));
    CHECK(s.any_in(2, 3));
    CHECK(!SizeSet::of({2}).any_in(0, 1));
}

TEST_CASE("hypergraph construction") {
    Hypergraph triple = build_hypergraph(3, 3, {{0, 1, 2}});
    CHECK(triple.n() == 3);
    CHECK(triple.edge_count() == 1);

    Hypergraph k43 = build_hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(k43.edge_count() == 4);

    // dedup is idempotent
    CHECK(build_hypergraph(3, 3, {{0, 1, 2}, {0, 1, 2}}).edge_count() == 1);
    // unsorted input is accepted by the builder, mask is what counts
    CHECK(build_hypergraph(3, 3, {{2, 0, 1}}) == triple);

    CHECK_THROWS_AS(build_hypergraph(3, 3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_hypergraph(3, 3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_hypergraph(3, 3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(65, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 0, {}), std::invalid_argument);
}

TEST_CASE("closed neighborhoods and isolated vertices") {
    Hypergraph triple = build_hypergraph(3, 3, {{0, 1, 2}});
    CHECK(closed_neighborhood(triple, 0) == VertexSet::full(3));

    Hypergraph k43 = build_hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(closed_neighborhood(k43, 0) == VertexSet::full(4));

    Hypergraph lonely = build_hypergraph(3, 3, {});
    CHECK(closed_neighborhood(lonely, 0) == VertexSet::single(0));
    CHECK(isolated_vertices(lonely) == VertexSet::full(3));

    Hypergraph padded = build_hypergraph(5, 3, {{0, 1, 2}});
    CHECK(isolated_vertices(padded) == VertexSet::of({3, 4}));
    CHECK(isolated_vertices(k43).empty());
    CHECK_THROWS_AS(closed_neighborhood(triple, 3), std::invalid_argument);

    // N[v] always holds v, and collapses to {v} exactly on isolated vertices
    std::mt19937_64 rng(3344);
    for (int t = 0; t < 30; ++t) {
        int n = std::uniform_int_distribution<int>(3, 9)(rng);
        Hypergraph h = test_oracle::random_host(rng, n, 3);
        for (int v = 0; v < n; ++v) {
            VertexSet nb = closed_neighborhood(h, v);
            CHECK(nb.contains(v));
            CHECK((nb == VertexSet::single(v)) == isolated_vertices(h).contains(v));
        }
    }
}

TEST_CASE("induced subhypergraphs") {
    Hypergraph triple = build_hypergraph(3, 3, {{0, 1, 2}});
    Hypergraph sub = induced_subhypergraph(triple, VertexSet::of({0, 1}));
    CHECK(sub.n() == 2);
    CHECK(sub.edge_count() == 0);

    Hypergraph pair = build_hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}});
    CHECK(induced_subhypergraph(pair, VertexSet::of({0, 1, 2})) ==
          build_hypergraph(3, 3, {{0, 1, 2}}));

    Hypergraph k43 = build_hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(induced_subhypergraph(k43, VertexSet::of({0, 1, 2})) ==
          build_hypergraph(3, 3, {{0, 1, 2}}));

    // reindexing keeps order; the map leads back
    Hypergraph shifted = induced_subhypergraph(pair, VertexSet::of({3, 4, 5}));
    CHECK(shifted == build_hypergraph(3, 3, {{0, 1, 2}}));
    auto back = induced_index_map(VertexSet::of({3, 4, 5}));
    CHECK(expand_indices(VertexSet::of({0, 2}), back) == VertexSet::of({3, 5}));

    CHECK(induced_subhypergraph(k43, k43.vertices()) == k43);
}

TEST_CASE("shadows") {
    Hypergraph triple = build_hypergraph(3, 3, {{0, 1, 2}});
    CHECK(k_shadow(triple, 2) == build_hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}}));

    Hypergraph k43 = build_hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    Hypergraph k4 = k_shadow(k43, 2);
    CHECK(k4.edge_count() == 6);

    Hypergraph empty = build_hypergraph(4, 3, {});
    CHECK(k_shadow(empty, 2).edge_count() == 0);
    CHECK_THROWS_AS(k_shadow(triple, 3), std::invalid_argument);
    CHECK_THROWS_AS(k_shadow(triple, 0), std::invalid_argument);

    // every shadow edge lies in an original edge and every k-subset shows up
    std::mt19937_64 rng(7231);
    for (int t = 0; t < 30; ++t) {
        int n = std::uniform_int_distribution<int>(3, 8)(rng);
        Hypergraph h = test_oracle::random_host(rng, n, 3);
        Hypergraph sh = k_shadow(h, 2);
        CHECK(sh.n() == h.n());
        for (VertexSet e : sh.edges()) {
            bool inside = false;
            for (VertexSet original : h.edges()) inside |= e.subset_of(original);
            CHECK(inside);
        }
        for (VertexSet original : h.edges())
            for_each_k_subset(original, 2, [&](VertexSet sub) {
                bool found = false;
                for (VertexSet e : sh.edges()) found |= e == sub;
                CHECK(found);
            });
    }
}

TEST_CASE("lifting") {
    Hypergraph triangle = build_hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}});
    Hypergraph lifted = lift_common(triangle, 3);
    CHECK(lifted == build_hypergraph(4, 3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));

    CHECK(lift_common(build_hypergraph(2, 2, {{0, 1}}), 3) ==
          build_hypergraph(3, 3, {{0, 1, 2}}));

    Hypergraph edgeless = lift_common(build_hypergraph(2, 2, {}), 3);
    CHECK(edgeless.n() == 3);
    CHECK(edgeless.edge_count() == 0);

    CHECK_THROWS_AS(lift_common(triangle, 2), std::invalid_argument);
    CHECK_THROWS_AS(lift_common(build_hypergraph(64, 2, {{0, 1}}), 3),
                    std::invalid_argument);

    // shadow of a lift at the original uniformity recovers every base edge
    std::mt19937_64 rng(9190);
    for (int t = 0; t < 30; ++t) {
        int n = std::uniform_int_distribution<int>(2, 8)(rng);
        Hypergraph h = test_oracle::random_host(rng, n, 2);
        if (h.edge_count() == 0) continue;
        Hypergraph down = k_shadow(lift_common(h, 3), 2);
        for (VertexSet e : h.edges()) {
            bool found = false;
            for (VertexSet f : down.edges()) found |= f == e;
            CHECK(found);
        }
    }
}

TEST_CASE("text round trips") {
    CHECK(parse_hypergraph("3 3\n0 1 2\n") == build_hypergraph(3, 3, {{0, 1, 2}}));
    Hypergraph k43 = build_hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(serialize_hypergraph(k43) == "4 3\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");

    // comments and blank lines are input-only
    CHECK(parse_hypergraph("# host\n\n3 3\n# edge\n0 1 2\n\n") ==
          build_hypergraph(3, 3, {{0, 1, 2}}));
    CHECK(serialize_hypergraph(build_hypergraph(0, 3, {})) == "0 3\n");

    CHECK_THROWS_AS(parse_hypergraph("3 3\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 3\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 3\n1 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 3\n0 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 3\n0 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("70 3\n"), ParseError);

    std::mt19937_64 rng(5150);
    for (int t = 0; t < 100; ++t) {
        int r = 2 + (t % 2);
        int n = std::uniform_int_distribution<int>(r, 10)(rng);
        Hypergraph h = test_oracle::random_host(rng, n, r);
        CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
    }
}
