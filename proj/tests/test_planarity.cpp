#include "opg/planarity.hpp"

#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "opg/graph.hpp"

using namespace opg;
using namespace opg::testing;

namespace {

// Independent planarity reference valid for n <= 6: a graph this small is
// non-planar iff it contains K5, K5 with one edge subdivided, or K_{3,3}
// as a subgraph (no larger subdivision fits into six vertices).
bool small_graph_planar(const Graph& g) {
    int n = g.n();
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;

    // K5 subgraph.
    for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (std::popcount(mask) != 5) continue;
        bool all = true;
        for (int u = 0; u < n && all; ++u)
            for (int v = u + 1; v < n && all; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v)) all = false;
        if (all) return false;
    }
    if (n >= 6) {
        // K5 with the edge ab subdivided through x.
        for (int x = 0; x < n; ++x)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if (x == a || x == b) continue;
                    if (!g.has_edge(a, x) || !g.has_edge(b, x)) continue;
                    bool all = true;
                    for (int u = 0; u < n && all; ++u)
                        for (int v = u + 1; v < n && all; ++v) {
                            if (u == x || v == x) continue;
                            if (u == a && v == b) continue;
                            if (!g.has_edge(u, v)) all = false;
                        }
                    if (all) return false;
                }
        // K_{3,3} subgraph over all 3+3 splits.
        for (uint64_t side = 0; side < (1ULL << n); ++side) {
            if (std::popcount(side) != 3 || n != 6) continue;
            bool all = true;
            for (int u = 0; u < n && all; ++u)
                for (int v = 0; v < n && all; ++v)
                    if ((side >> u & 1) && !(side >> v & 1) && !g.has_edge(u, v)) all = false;
            if (all) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("planarity of named graphs") {
    CHECK(is_planar(Graph::complete(4)).planar);
    CHECK_FALSE(is_planar(Graph::complete(5)).planar);
    CHECK_FALSE(is_planar(Graph::complete(6)).planar);
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)).planar);
    CHECK_FALSE(is_planar(petersen()).planar);
    CHECK(is_planar(cube_q3()).planar);
    CHECK(is_planar(path_graph(7)).planar);
    CHECK(is_planar(cycle_graph(7)).planar);
    CHECK(is_planar(star_graph(6)).planar);
    CHECK(is_planar(Graph::from_edge_list(5, {})).planar);
}

TEST_CASE("embeddings satisfy the Euler relation") {
    auto face_check = [](const Graph& g) {
        PlanarEmbedding e = is_planar(g);
        REQUIRE(e.planar);
        CHECK(count_rotation_faces(g, e.rotation) == g.m() - g.n() + 2);
    };
    face_check(Graph::complete(4));   // 4 faces
    face_check(cube_q3());            // 6 faces
    face_check(cycle_graph(9));       // 2 faces
    face_check(path_graph(5));        // 1 face
    // Maximal planar graph on 6 vertices: the octahedron.
    Graph octahedron = Graph::from_edge_list(
        6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4},
            {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    face_check(octahedron);           // 8 faces
}

TEST_CASE("planarity verdict matches the small-graph reference") {
    for (int n = 4; n <= 6; ++n) {
        auto pairs = pair_list(n);
        for (uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
            Graph g = graph_from_mask(n, pairs, mask);
            PlanarEmbedding e = is_planar(g);
            CHECK(e.planar == small_graph_planar(g));
            if (e.planar && is_connected(g) && g.m() > 0)
                CHECK(count_rotation_faces(g, e.rotation) == g.m() - g.n() + 2);
        }
    }
}

TEST_CASE("disconnected embeddings count faces per component") {
    // Two triangles: each component contributes 2 face orbits.
    Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    PlanarEmbedding e = is_planar(g);
    REQUIRE(e.planar);
    CHECK(count_rotation_faces(g, e.rotation) == 4);
}

TEST_CASE("embedding output is deterministic") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(8, 0.35, rng);
        PlanarEmbedding a = is_planar(g);
        PlanarEmbedding b = is_planar(g);
        CHECK(a.planar == b.planar);
        CHECK(a.rotation == b.rotation);
    }
}
