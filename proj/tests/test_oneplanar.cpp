#include "opg/oneplanar.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "opg/catalog.hpp"
#include "opg/drawing.hpp"
#include "opg/error.hpp"
#include "opg/graph.hpp"

using namespace opg;
using namespace opg::testing;

namespace {

Graph complete_minus_edge(int n, int u, int v) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!(a == u && b == v)) edges.push_back({a, b});
    return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("five-vertex complete graph needs exactly one crossing") {
    OnePlanarResult res = is_one_planar(Graph::complete(5));
    REQUIRE(res.outcome == OnePlanarOutcome::found);
    REQUIRE(res.drawing.has_value());
    CHECK(res.drawing->graph == Graph::complete(5));
    CHECK(res.drawing->crossings.size() == 1);
    CHECK(drawing_code(*res.drawing) == drawing_code(fixture_k5()));
}

TEST_CASE("six-vertex complete graph needs exactly three crossings") {
    OnePlanarResult res = is_one_planar(Graph::complete(6));
    REQUIRE(res.outcome == OnePlanarOutcome::found);
    CHECK(res.drawing->crossings.size() == 3);
    CHECK(drawing_code(*res.drawing) == drawing_code(fixture_k6()));
}

TEST_CASE("seven-vertex complete graph is rejected by the edge count alone") {
    OnePlanarResult res = is_one_planar(Graph::complete(7));
    CHECK(res.outcome == OnePlanarOutcome::impossible);
    CHECK(res.reason.find("21") != std::string::npos);
    CHECK(res.reason.find("19") != std::string::npos);
    CHECK(res.nodes_explored == 0);  // rejected before any search
}

TEST_CASE("bipartite and planar inputs") {
    OnePlanarResult k33 = is_one_planar(complete_bipartite(3, 3));
    REQUIRE(k33.outcome == OnePlanarOutcome::found);
    CHECK(k33.drawing->crossings.size() == 1);

    for (const Graph& g : {Graph::complete(4), cube_q3(), cycle_graph(6), path_graph(5),
                           star_graph(4)}) {
        OnePlanarResult res = is_one_planar(g);
        REQUIRE(res.outcome == OnePlanarOutcome::found);
        CHECK(res.drawing->crossings.empty());
        CHECK(res.drawing->graph == g);
    }
}

TEST_CASE("the complete 4-clique joined to three isolated vertices is refuted") {
    Graph g = Graph::join_complete_empty(4, 3);
    CHECK(g.n() == 7);
    CHECK(g.m() == 18);
    OnePlanarResult res = is_one_planar(g);
    CHECK(res.outcome == OnePlanarOutcome::impossible);
    CHECK(res.nodes_explored > 0);
}

TEST_CASE("tiny budgets surface as an explicit exhausted outcome") {
    OnePlanarResult res = is_one_planar(Graph::join_complete_empty(4, 3), 10);
    CHECK(res.outcome == OnePlanarOutcome::exhausted);
    CHECK(res.reason.find("budget") != std::string::npos);
    CHECK(res.nodes_explored >= 10);
}

TEST_CASE("scale guards") {
    SplitMix64 rng(7);
    CHECK_THROWS_AS(is_one_planar(random_graph(10, 0.5, rng)), Error);
    CHECK_THROWS_AS(enumerate_drawings(random_graph(8, 0.5, rng)), Error);
    CHECK_THROWS_AS(one_planar_reference(random_graph(7, 0.5, rng)), Error);
}

TEST_CASE("pruned search agrees with the unpruned reference on small graphs") {
    std::vector<Graph> corpus = {
        Graph::complete(5),
        complete_bipartite(3, 3),
        complete_bipartite(2, 4),
        complete_minus_edge(6, 4, 5),
        cycle_graph(6),
        star_graph(5),
    };
    SplitMix64 rng(20260822);
    for (int i = 0; i < 24; ++i) {
        int n = 4 + static_cast<int>(rng.below(3));
        double p = 0.35 + 0.1 * static_cast<double>(rng.below(5));
        corpus.push_back(random_graph(n, p, rng));
    }
    for (const Graph& g : corpus) {
        CAPTURE(format_edge_list_text(g));
        CrossingSearchReference ref = one_planar_reference(g);
        OnePlanarResult res = is_one_planar(g);
        REQUIRE(res.outcome != OnePlanarOutcome::exhausted);
        CHECK((res.outcome == OnePlanarOutcome::found) == ref.one_planar);
        if (ref.one_planar) {
            REQUIRE(res.drawing.has_value());
            CHECK(static_cast<int>(res.drawing->crossings.size()) == ref.min_crossings);
            CHECK(res.drawing->graph == g);
        }
    }
}

TEST_CASE("drawing enumeration matches the fixture catalog") {
    DrawingClassList k5 = enumerate_drawings(Graph::complete(5));
    CHECK(k5.complete);
    REQUIRE(k5.codes.size() == 1);
    CHECK(k5.codes[0] == drawing_code(fixture_k5()));

    DrawingClassList k6 = enumerate_drawings(Graph::complete(6));
    CHECK(k6.complete);
    REQUIRE(k6.codes.size() == 1);
    CHECK(k6.codes[0] == drawing_code(fixture_k6()));

    DrawingClassList near = enumerate_drawings(complete_minus_edge(6, 4, 5));
    CHECK(near.complete);
    std::set<std::string> got(near.codes.begin(), near.codes.end());
    std::set<std::string> expect = {drawing_code(fixture_a1()), drawing_code(fixture_a2()),
                                    drawing_code(fixture_a3())};
    CHECK(got == expect);
    CHECK(near.codes.size() == 3);
}

TEST_CASE("enumeration reports incompleteness on flexible planar graphs") {
    DrawingClassList c4 = enumerate_drawings(cycle_graph(4));
    CHECK_FALSE(c4.complete);
    bool empty_set_listed = false;
    for (const auto& x : c4.unresolved)
        if (x.empty()) empty_set_listed = true;
    CHECK(empty_set_listed);
}

TEST_CASE("enumeration returned drawings validate and match the input graph") {
    Graph g = complete_minus_edge(6, 4, 5);
    DrawingClassList list = enumerate_drawings(g);
    REQUIRE(list.representatives.size() == list.codes.size());
    for (const Drawing& d : list.representatives) {
        CHECK(d.graph == g);
        CHECK(!validate(d).has_value());
    }
}
