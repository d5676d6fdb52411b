#include "opg/hamilton.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "opg/catalog.hpp"
#include "opg/chordal.hpp"
#include "opg/error.hpp"
#include "opg/graph.hpp"
#include "opg/phi.hpp"

using namespace opg;
using namespace opg::testing;

namespace {

Graph k6_minus_edge() {
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u == 4 && v == 5)) edges.push_back({u, v});
    return Graph::from_edge_list(6, edges);
}

}  // namespace

TEST_CASE("path validity checker") {
    Graph p4 = path_graph(4);
    CHECK(is_ham_path(p4, HamPath{{0, 1, 2, 3}}, 0, 3));
    CHECK_FALSE(is_ham_path(p4, HamPath{{0, 1, 2, 3}}, 3, 0));  // wrong orientation
    CHECK_FALSE(is_ham_path(p4, HamPath{{0, 1, 2}}, 0, 2));     // missing a vertex
    CHECK_FALSE(is_ham_path(p4, HamPath{{0, 1, 1, 3}}, 0, 3));  // repeat
    CHECK_FALSE(is_ham_path(p4, HamPath{{0, 2, 1, 3}}, 0, 3));  // non-adjacent step
    CHECK_FALSE(is_ham_path(p4, HamPath{{}}, 0, 3));
}

TEST_CASE("oracle finds paths and certifies absence") {
    Graph k5 = Graph::complete(5);
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) {
            auto p = oracle_ham_path(k5, x, y);
            REQUIRE(p.has_value());
            CHECK(is_ham_path(k5, *p, x, y));
        }

    // In an even cycle the endpoints of any spanning path get opposite
    // parities, so same-parity pairs have none while adjacent pairs do.
    Graph c6 = cycle_graph(6);
    CHECK(oracle_ham_path(c6, 0, 1).has_value());
    CHECK_FALSE(oracle_ham_path(c6, 0, 2).has_value());

    // A clique of four with five pairwise non-adjacent attachments: paths
    // exist exactly when they can alternate, which needs both endpoints on
    // the independent side.
    Graph jc = Graph::join_complete_empty(4, 5);
    auto between_independents = oracle_ham_path(jc, 4, 5);
    REQUIRE(between_independents.has_value());
    CHECK(is_ham_path(jc, *between_independents, 4, 5));
    CHECK_FALSE(oracle_ham_path(jc, 0, 1).has_value());
    CHECK_FALSE(oracle_ham_path(jc, 0, 4).has_value());
    CHECK_FALSE(oracle_ham_cycle(jc).has_value());

    auto cyc = oracle_ham_cycle(Graph::complete(5));
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 5);
    auto ring = oracle_ham_cycle(c6);
    REQUIRE(ring.has_value());
    Graph c6check = cycle_graph(6);
    for (std::size_t i = 0; i < ring->size(); ++i)
        CHECK(c6check.has_edge((*ring)[i], (*ring)[(i + 1) % ring->size()]));

    // No spanning cycle means no spanning path between adjacent vertices
    // (the edge would close one), yet non-adjacent pairs have them.
    CHECK_FALSE(oracle_ham_cycle(petersen()).has_value());
    CHECK_FALSE(oracle_ham_path(petersen(), 0, 1).has_value());
    CHECK(oracle_ham_path(petersen(), 0, 2).has_value());

    CHECK_THROWS_AS((void)oracle_ham_path(Graph::complete(16), 0, 1), Error);
    CHECK_THROWS_AS((void)oracle_ham_path(k5, 2, 2), Error);
    CHECK_THROWS_AS((void)oracle_ham_path(k5, 0, 9), Error);
}

TEST_CASE("thirteen-vertex chordal fixture has no spanning cycle") {
    Graph g0 = fixture_g0().graph;
    REQUIRE(g0.n() == 13);
    CHECK_FALSE(oracle_ham_cycle(g0).has_value());
}

TEST_CASE("all-pairs verdicts") {
    HamConnectedResult full = oracle_ham_connected(k6_minus_edge());
    CHECK(full.connected);
    CHECK_FALSE(full.failing_pair.has_value());

    HamConnectedResult ring = oracle_ham_connected(cycle_graph(6));
    CHECK_FALSE(ring.connected);
    REQUIRE(ring.failing_pair.has_value());
    CHECK(*ring.failing_pair == std::pair<int, int>{0, 2});

    CHECK(oracle_ham_connected(Graph::complete(5)).connected);
    CHECK_THROWS_AS((void)oracle_ham_connected(Graph::complete(13)), Error);
}

TEST_CASE("splice cases and hypothesis audit") {
    Graph g = k6_minus_edge();  // 4 and 5 are the non-adjacent pair

    SUBCASE("removal vertex at an endpoint") {
        // Path of g - 4 from neighbour 0 of vertex 4 to the far end 3.
        HamPath sub{{0, 5, 1, 2, 3}};
        HamPath got = splice_extend(g, 4, 0, 4, 3, sub);
        CHECK(got.sequence == std::vector<int>{4, 0, 5, 1, 2, 3});
        // Same sub-path handed over in the opposite orientation.
        HamPath flipped{{3, 2, 1, 5, 0}};
        CHECK(splice_extend(g, 4, 0, 4, 3, flipped).sequence ==
              std::vector<int>{4, 0, 5, 1, 2, 3});
        // Requested pair reversed: the result runs towards the removal vertex.
        CHECK(splice_extend(g, 4, 0, 3, 4, sub).sequence ==
              std::vector<int>{3, 2, 1, 5, 0, 4});
    }

    SUBCASE("detour splice prefers the edge nearer the start") {
        Graph k5 = Graph::complete(5);
        // Anchor 0 sits inside the path with both its path edges usable;
        // the edge on the start side is the one replaced.
        HamPath sub{{1, 0, 3, 2}};
        HamPath got = splice_extend(k5, 4, 0, 1, 2, sub);
        CHECK(got.sequence == std::vector<int>{1, 4, 0, 3, 2});
    }

    SUBCASE("detour splice falls back to the far edge") {
        // Vertex 5's neighbours exclude 1, so the path edge 1-0 cannot
        // take the detour and 0-2 must.
        Graph g2 = Graph::from_edge_list(
            6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
                {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
        // u = 5: neighbours {0, 2, 3, 4}; a = 0 covers N[5] and has the
        // single outside neighbour 1.
        HamPath sub{{1, 0, 2, 3, 4}};
        HamPath got = splice_extend(g2, 5, 0, 1, 4, sub);
        CHECK(got.sequence == std::vector<int>{1, 0, 5, 2, 3, 4});
    }

    SUBCASE("anchor at an endpoint") {
        // Path of g - {4, 0} from neighbour 2 of vertex 4 to the far end
        // 1, entered through the stub 0-4-2.
        HamPath sub{{2, 5, 3, 1}};
        HamPath got = splice_extend(g, 4, 0, 0, 1, sub);
        CHECK(got.sequence == std::vector<int>{0, 4, 2, 5, 3, 1});
        // Far end first in the requested pair: same walk, reversed.
        CHECK(splice_extend(g, 4, 0, 1, 0, sub).sequence ==
              std::vector<int>{1, 3, 5, 2, 4, 0});
    }

    SUBCASE("violations are reported individually") {
        Graph p5 = path_graph(5);
        CHECK_THROWS_WITH_AS((void)splice_extend(p5, 2, 1, 0, 4, HamPath{{0, 1, 3, 4}}),
                             doctest::Contains("degree at least 3"), Error);
        // Neighbourhood containment fails: 1 and 3 are adjacent to 2 but
        // far apart in a cycle with chords.
        Graph bad = Graph::from_edge_list(
            6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {0, 1}, {3, 4}, {0, 5}, {1, 5},
                {3, 5}, {4, 5}});
        CHECK_THROWS_WITH_AS((void)splice_extend(bad, 2, 0, 1, 3, HamPath{{1, 0, 3, 4, 5}}),
                             doctest::Contains("closed neighbourhood"), Error);
        // Wrong vertex coverage in the sub-path.
        CHECK_THROWS_WITH_AS((void)splice_extend(g, 4, 0, 4, 3, HamPath{{0, 1, 2, 3}}),
                             doctest::Contains("expected vertex set"), Error);
        // Sub-path reaching the removal vertex through its non-neighbour 5.
        CHECK_THROWS_WITH_AS((void)splice_extend(g, 4, 0, 4, 3, HamPath{{5, 0, 1, 2, 3}}),
                             doctest::Contains("neighbour of the removal vertex"), Error);
        CHECK_THROWS_AS((void)splice_extend(g, 4, 0, 3, 3, HamPath{{0, 5, 1, 2, 3}}), Error);
    }
}

TEST_CASE("constructive paths on base graphs") {
    Graph k5 = Graph::complete(5);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            if (x == y) continue;
            HamPath p = ktree_ham_path(k5, 4, x, y);
            CHECK(is_ham_path(k5, p, x, y));
        }
    Graph g = k6_minus_edge();
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            if (x == y) continue;
            CHECK(is_ham_path(g, ktree_ham_path(g, 4, x, y), x, y));
        }
}

TEST_CASE("constructive path preconditions") {
    CHECK_THROWS_WITH_AS((void)ktree_ham_path(Graph::complete(4), 2, 0, 1),
                         doctest::Contains("k >= 3"), Error);
    CHECK_THROWS_WITH_AS((void)ktree_ham_path(cycle_graph(6), 3, 0, 1),
                         doctest::Contains("k-tree"), Error);
    CHECK_THROWS_WITH_AS((void)ktree_ham_path(Graph::complete(3), 3, 0, 1),
                         doctest::Contains("k + 1"), Error);
    // A 4-tree of order 7 with three simplicial vertices is outside the
    // guarantee and must be refused.
    Graph multi = Graph::join_complete_empty(4, 3);
    REQUIRE(is_k_tree(multi, 4).is_k_tree);
    REQUIRE(simplicial_vertices(multi).size() == 3);
    CHECK_THROWS_WITH_AS((void)ktree_ham_path(multi, 4, 0, 1),
                         doctest::Contains("two simplicial"), Error);
    CHECK_THROWS_AS((void)ktree_ham_path(Graph::complete(5), 4, 2, 2), Error);
}

TEST_CASE("constructive paths agree with the oracle on the seven-vertex member") {
    PhiAtlas atlas = generate_phi(7);
    REQUIRE(atlas.by_order.at(7).size() == 2);
    Graph g = atlas.by_order.at(7)[0].drawing.graph;
    REQUIRE(g.n() == 7);
    int pairs = 0;
    for (int x = 0; x < 7; ++x)
        for (int y = x + 1; y < 7; ++y) {
            HamPath p = ktree_ham_path(g, 4, x, y);
            CHECK(is_ham_path(g, p, x, y));
            CHECK(oracle_ham_path(g, x, y).has_value());
            ++pairs;
        }
    CHECK(pairs == 21);
}

TEST_CASE("constructive paths on random two-simplicial 4-trees") {
    // Always hosting the new vertex on a clique through the previous one
    // retires that vertex's simplicial status, so the count stays at two.
    SplitMix64 rng(0x5eedbeefULL);
    for (int sample = 0; sample < 6; ++sample) {
        Graph g = Graph::complete(5);
        std::vector<int> host = {0, 1, 2, 3};  // k-clique through the newest vertex
        host[rng.below(4)] = 4;
        while (g.n() < 12) {
            int fresh = g.n();
            g = g.add_vertex(host);
            host[rng.below(4)] = fresh;
        }
        REQUIRE(is_k_tree(g, 4).is_k_tree);
        REQUIRE(simplicial_vertices(g).size() == 2);
        for (auto [x, y] : {std::pair<int, int>{0, 11}, {3, 7}, {10, 11}, {5, 6}}) {
            HamPath p = ktree_ham_path(g, 4, x, y);
            CHECK(is_ham_path(g, p, x, y));
        }
    }
}

TEST_CASE("theorem dispatch") {
    Graph k6 = Graph::complete(6);
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) {
            TheoremHamResult r = theorem_ham_path(k6, x, y);
            REQUIRE(r.path.has_value());
            CHECK(is_ham_path(k6, *r.path, x, y));
            CHECK(r.reason.empty());
        }

    TheoremHamResult ring = theorem_ham_path(cycle_graph(6), 0, 3);
    CHECK_FALSE(ring.path.has_value());
    CHECK(ring.reason == "the graph is not chordal");

    TheoremHamResult low = theorem_ham_path(fixture_g0().graph, 0, 12);
    CHECK_FALSE(low.path.has_value());
    CHECK(low.reason == "connectivity 3 < 4");

    // Chordal, 4-connected, order 7, but not two-simplicial: the missing
    // hypothesis is exactly the drawable one.
    TheoremHamResult multi = theorem_ham_path(Graph::join_complete_empty(4, 3), 0, 6);
    CHECK_FALSE(multi.path.has_value());
    CHECK(multi.reason.find("not 1-planar") != std::string::npos);

    CHECK_THROWS_AS((void)theorem_ham_path(k6, 1, 1), Error);
}

TEST_CASE("theorem paths across the atlas") {
    std::map<int, std::vector<Graph>> classes = phi_graphs(9);
    std::set<std::vector<uint64_t>> seen;
    int graphs = 0;
    for (const auto& [order, list] : classes)
        for (const Graph& g : list) {
            if (!seen.insert(canonical_form(g).code).second) continue;
            ++graphs;
            for (int x = 0; x < g.n(); ++x)
                for (int y = x + 1; y < g.n(); ++y) {
                    TheoremHamResult r = theorem_ham_path(g, x, y);
                    REQUIRE(r.path.has_value());
                    CHECK(is_ham_path(g, *r.path, x, y));
                }
            HamConnectedResult oracle = oracle_ham_connected(g);
            CHECK(oracle.connected);
        }
    CHECK(graphs == 4);  // one class at orders 7 and 8, two at order 9
}
