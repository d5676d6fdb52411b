#include "opg/catalog.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "opg/chordal.hpp"
#include "opg/connectivity.hpp"
#include "opg/drawing.hpp"
#include "opg/error.hpp"
#include "opg/graph.hpp"

using namespace opg;

namespace {

// Crossed edge pairs by endpoints, for readable expectations.
std::set<std::pair<Edge, Edge>> crossed_edge_pairs(const Drawing& d) {
    std::set<std::pair<Edge, Edge>> out;
    for (auto [i, j] : d.crossings) out.insert({d.graph.edges()[i], d.graph.edges()[j]});
    return out;
}

int triangular_face_count(const Drawing& d) {
    int k = 0;
    for (const Face& f : faces(d))
        if (face_nodes(d, f).size() == 3) ++k;
    return k;
}

}  // namespace

TEST_CASE("layout builder rejects degenerate geometry") {
    // Two edges crossing at a shared interior point of a third edge.
    GeometricLayout bad;
    bad.points = {{0, 0}, {10, 0}, {5, 5}, {5, -5}};
    bad.edges = {{0, 1, {}}, {2, 3, {}}, {0, 2, {}}};
    // (0,1) and (2,3) cross at (5,0) -- fine so far; add an edge through it.
    bad.edges.push_back({1, 2, {}});
    CHECK_NOTHROW(drawing_from_layout(bad));  // still in general position

    GeometricLayout overlap;
    overlap.points = {{0, 0}, {10, 0}, {20, 0}};
    overlap.edges = {{0, 2, {}}, {0, 1, {}}};  // collinear overlap
    CHECK_THROWS_AS(drawing_from_layout(overlap), Error);

    GeometricLayout through_vertex;
    through_vertex.points = {{0, 0}, {10, 0}, {5, 0}};
    through_vertex.edges = {{0, 1, {}}};  // vertex 2 sits on edge (0,1)
    CHECK_THROWS_AS(drawing_from_layout(through_vertex), Error);

    GeometricLayout twice;
    twice.points = {{0, 0}, {30, 0}, {10, 5}, {10, -5}, {20, 5}, {20, -5}};
    twice.edges = {{0, 1, {}}, {2, 3, {}}, {4, 5, {}}};  // (0,1) crossed twice
    CHECK_THROWS_AS(drawing_from_layout(twice), Error);
}

TEST_CASE("five-vertex complete fixture matches the combinatorial build") {
    Drawing k5 = fixture_k5();
    CHECK(k5.graph == Graph::complete(5));
    REQUIRE(k5.crossings.size() == 1);
    CHECK(crossed_edge_pairs(k5) == std::set<std::pair<Edge, Edge>>{{{0, 3}, {1, 2}}});
    CHECK(faces(k5).size() == 8);
    CHECK(triangular_face_count(k5) == 8);

    // Independent route: 4-join of the tetrahedron over one of its twin
    // pairs produces the same drawing up to relabelling.
    Drawing tetra = plane_drawing(
        Graph::complete(4),
        {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
    std::vector<TwinPair> twins = twin_faces(tetra);
    REQUIRE(!twins.empty());
    Drawing joined = four_join(tetra, twins[0].f1, twins[0].f2);
    CHECK(drawing_code(joined) == drawing_code(k5));
}

TEST_CASE("six-vertex complete fixture uses three crossings") {
    Drawing k6 = fixture_k6();
    CHECK(k6.graph == Graph::complete(6));
    REQUIRE(k6.crossings.size() == 3);
    CHECK(crossed_edge_pairs(k6) ==
          std::set<std::pair<Edge, Edge>>{
              {{0, 4}, {1, 3}}, {{0, 5}, {2, 3}}, {{1, 5}, {2, 4}}});
    // Planarization: 9 nodes, 21 arcs, hence 14 faces.
    CHECK(faces(k6).size() == 14);
}

TEST_CASE("first six-vertex near-complete fixture") {
    Drawing a1 = fixture_a1();
    CHECK(a1.graph.n() == 6);
    CHECK(a1.graph.m() == 14);
    CHECK_FALSE(a1.graph.has_edge(2, 5));
    REQUIRE(a1.crossings.size() == 2);
    CHECK(crossed_edge_pairs(a1) ==
          std::set<std::pair<Edge, Edge>>{{{0, 3}, {1, 5}}, {{1, 4}, {2, 3}}});
    CHECK(faces(a1).size() == 12);
    CHECK(triangular_face_count(a1) == 12);

    // The twin pair receiving the b1/b2 joins.
    std::vector<Face> a1_faces = faces(a1);
    std::vector<TwinPair> twins = twin_faces(a1);
    bool found_345_045 = false;
    for (const TwinPair& t : twins) {
        std::vector<int> f1 = face_nodes(a1, a1_faces[t.f1]);
        std::vector<int> f2 = face_nodes(a1, a1_faces[t.f2]);
        std::sort(f1.begin(), f1.end());
        std::sort(f2.begin(), f2.end());
        if (f1 == std::vector<int>{3, 4, 5} && f2 == std::vector<int>{0, 4, 5})
            found_345_045 = true;
    }
    CHECK(found_345_045);
}

TEST_CASE("second and third six-vertex fixtures differ as drawings") {
    Drawing a2 = fixture_a2();
    Drawing a3 = fixture_a3();
    CHECK(a2.graph.n() == 6);
    CHECK(a2.graph.m() == 14);
    CHECK_FALSE(a2.graph.has_edge(0, 5));
    CHECK(a3.graph.m() == 14);
    CHECK_FALSE(a3.graph.has_edge(4, 5));
    CHECK(a2.crossings.size() == 3);
    CHECK(a3.crossings.size() == 3);
    CHECK(crossed_edge_pairs(a2) ==
          std::set<std::pair<Edge, Edge>>{
              {{0, 3}, {1, 5}}, {{0, 4}, {2, 5}}, {{1, 4}, {2, 3}}});
    CHECK(crossed_edge_pairs(a3) ==
          std::set<std::pair<Edge, Edge>>{
              {{0, 3}, {1, 5}}, {{0, 4}, {2, 5}}, {{1, 4}, {2, 3}}});
    CHECK(faces(a2).size() == 13);
    CHECK(faces(a3).size() == 13);
    CHECK(are_isomorphic(a2.graph, a3.graph));
    CHECK(drawing_code(a2) != drawing_code(a3));
}

TEST_CASE("seven-vertex fixtures are the two joins plus a redrawing") {
    Drawing a1 = fixture_a1();
    Drawing b1 = fixture_b1();
    Drawing b2 = fixture_b2();
    Drawing b3 = fixture_b3();

    for (const Drawing* d : {&b1, &b2, &b3}) {
        CHECK(d->graph.n() == 7);
        CHECK(d->graph.m() == 18);
        CHECK(d->graph.degree(6) == 4);
    }
    CHECK(b1.graph == b2.graph);
    CHECK(b1.graph.has_edge(0, 6));
    CHECK(b1.graph.has_edge(3, 6));
    CHECK(b1.graph.has_edge(4, 6));
    CHECK(b1.graph.has_edge(5, 6));
    CHECK(b3.graph.has_edge(2, 6));
    CHECK_FALSE(b3.graph.has_edge(5, 6));
    CHECK(are_isomorphic(b3.graph, b1.graph));

    CHECK(b1.crossings.size() == 3);
    CHECK(b2.crossings.size() == 3);
    CHECK(b3.crossings.size() == 4);

    // b1 and b2 realize the two orders of the 4-join into a1's twin pair
    // on faces {3,4,5} / {0,4,5}.
    TwinPair host{};
    bool have_host = false;
    std::vector<Face> a1_faces = faces(a1);
    for (const TwinPair& t : twin_faces(a1)) {
        std::vector<int> f1 = face_nodes(a1, a1_faces[t.f1]);
        std::vector<int> f2 = face_nodes(a1, a1_faces[t.f2]);
        std::sort(f1.begin(), f1.end());
        std::sort(f2.begin(), f2.end());
        if (f1 == std::vector<int>{3, 4, 5} && f2 == std::vector<int>{0, 4, 5}) {
            host = t;
            have_host = true;
        }
    }
    REQUIRE(have_host);
    Drawing join_12 = four_join(a1, host.f1, host.f2);
    Drawing join_21 = four_join(a1, host.f2, host.f1);
    std::set<std::string> fixture_codes = {drawing_code(b1), drawing_code(b2)};
    std::set<std::string> join_codes = {drawing_code(join_12), drawing_code(join_21)};
    CHECK(fixture_codes == join_codes);
    CHECK(drawing_code(b1) != drawing_code(b2));
    CHECK(drawing_code(b3) != drawing_code(b1));
    CHECK(drawing_code(b3) != drawing_code(b2));
}

TEST_CASE("thirteen-vertex fixture separates connectivity from spanning paths") {
    Drawing g0 = fixture_g0();
    CHECK(g0.graph.n() == 13);
    CHECK(g0.graph.m() == 34);
    REQUIRE(g0.crossings.size() == 1);
    CHECK(crossed_edge_pairs(g0) == std::set<std::pair<Edge, Edge>>{{{1, 11}, {2, 12}}});

    CHECK(is_chordal(g0.graph).chordal);
    CHECK(vertex_connectivity(g0.graph).kappa == 3);
    CHECK(is_simplicial(g0.graph, 4));

    // Removing five vertices leaves six components, so toughness is 5/6.
    std::uint64_t cut = vertex_list_mask({0, 1, 3, 5, 7});
    CHECK(component_count_after_removal(g0.graph, cut) == 6);
    ToughnessResult tough = toughness(g0.graph);
    REQUIRE_FALSE(tough.infinite);
    CHECK(tough.value == Rational::of(5, 6));
}

TEST_CASE("kite patterns are crossing-free with the expected shapes") {
    std::vector<Drawing> pats;
    for (int k = 1; k <= 6; ++k) pats.push_back(fixture_d_pattern(k));
    CHECK_THROWS_AS(fixture_d_pattern(0), Error);
    CHECK_THROWS_AS(fixture_d_pattern(7), Error);

    for (const Drawing& d : pats) CHECK(d.crossings.empty());

    auto degrees = [](const Graph& g) {
        std::vector<int> ds;
        for (int v = 0; v < g.n(); ++v) ds.push_back(g.degree(v));
        std::sort(ds.begin(), ds.end());
        return ds;
    };

    CHECK(pats[0].graph.n() == 6);
    CHECK(degrees(pats[0].graph) == std::vector<int>{2, 2, 3, 3, 3, 5});
    CHECK(faces(pats[0]).size() == 5);

    CHECK(pats[1].graph.n() == 6);
    CHECK(degrees(pats[1].graph) == std::vector<int>{2, 2, 3, 3, 4, 4});
    CHECK(faces(pats[1]).size() == 5);

    CHECK(pats[2].graph.n() == 8);
    CHECK(components(pats[2].graph).size() == 2);
    CHECK(degrees(pats[2].graph) == std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3});

    CHECK(pats[3].graph.n() == 7);
    CHECK(components(pats[3].graph).size() == 1);
    CHECK(degrees(pats[3].graph) == std::vector<int>{2, 2, 3, 3, 3, 3, 4});

    CHECK(pats[4].graph.n() == 7);
    CHECK(degrees(pats[4].graph) == std::vector<int>{2, 2, 2, 3, 3, 3, 5});

    CHECK(pats[5].graph.n() == 7);
    CHECK(degrees(pats[5].graph) == std::vector<int>{2, 2, 2, 2, 3, 3, 6});

    // The six patterns are pairwise non-isomorphic as graphs.
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            CHECK_FALSE(are_isomorphic(pats[i].graph, pats[j].graph));
}

TEST_CASE("fixtures survive serialization round-trips") {
    std::vector<Drawing> all = {fixture_k5(), fixture_k6(), fixture_a1(), fixture_a2(),
                                fixture_a3(), fixture_b1(), fixture_b2(), fixture_b3(),
                                fixture_g0()};
    for (const Drawing& d : all) {
        std::string text = serialize_drawing(d);
        Drawing back = parse_drawing(text);
        CHECK(serialize_drawing(back) == text);
        CHECK(drawing_code(back) == drawing_code(d));
    }
}
