#include "opg/phi.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "opg/catalog.hpp"
#include "opg/chordal.hpp"
#include "opg/connectivity.hpp"
#include "opg/error.hpp"
#include "opg/oneplanar.hpp"

using namespace opg;

TEST_CASE("atlas seeds and guards") {
    PhiAtlas atlas = generate_phi(7);
    REQUIRE(atlas.by_order.at(7).size() == 2);
    std::set<std::string> codes = {atlas.by_order.at(7)[0].code, atlas.by_order.at(7)[1].code};
    std::set<std::string> expected = {drawing_code(fixture_b1()), drawing_code(fixture_b2())};
    CHECK(codes == expected);
    CHECK(atlas.by_order.at(7)[0].code < atlas.by_order.at(7)[1].code);
    for (const PhiMember& m : atlas.by_order.at(7)) {
        CHECK(m.parent == -1);
        CHECK(atlas.find(7, m.code) == &m);
    }
    CHECK(atlas.find(7, "no-such-code") == nullptr);
    CHECK(atlas.find(8, expected.begin()->c_str()) == nullptr);

    CHECK_THROWS_AS(generate_phi(6), Error);
    CHECK_THROWS_AS(generate_phi(13), Error);
    CHECK_THROWS_AS(generate_phi(9, 8), Error);
}

TEST_CASE("level sizes are frozen regression values") {
    PhiAtlas atlas = generate_phi(9);
    CHECK(atlas.by_order.at(7).size() == 2);
    CHECK(atlas.by_order.at(8).size() == 3);
    CHECK(atlas.by_order.at(9).size() == 6);
}

TEST_CASE("member invariants and parent links") {
    PhiAtlas atlas = generate_phi(9);
    for (const auto& [order, members] : atlas.by_order) {
        for (const PhiMember& m : members) {
            CAPTURE(order);
            CHECK_FALSE(validate(m.drawing).has_value());
            CHECK(m.drawing.graph.n() == order);
            CHECK(static_cast<int>(m.drawing.crossings.size()) == order - 4);
            CHECK(is_k_tree(m.drawing.graph, 4).is_k_tree);
            CHECK(is_chordal(m.drawing.graph).chordal);
            CHECK(simplicial_vertices(m.drawing.graph).size() == 2);
            if (order == 7) continue;
            // Parent links replay: joining the recorded twin pair of the
            // recorded parent reproduces this member exactly.
            const PhiMember& parent = atlas.by_order.at(order - 1).at(m.parent);
            CHECK(m.drawing.crossings.size() == parent.drawing.crossings.size() + 1);
            Drawing replay = four_join(parent.drawing, m.parent_f1, m.parent_f2);
            CHECK(drawing_code(replay) == m.code);
        }
    }
}

TEST_CASE("membership round-trips over the whole atlas") {
    PhiAtlas atlas = generate_phi(9);
    std::set<std::string> seed_codes = {drawing_code(fixture_b1()), drawing_code(fixture_b2())};
    for (const auto& [order, members] : atlas.by_order) {
        for (const PhiMember& m : members) {
            PhiMembership r = phi_membership(m.drawing);
            CAPTURE(order);
            CHECK(r.member);
            REQUIRE_FALSE(r.codes.empty());
            CHECK(r.codes.front() == m.code);
            CHECK(seed_codes.count(r.codes.back()) == 1);
            CHECK(static_cast<int>(r.peeled.size()) == order - 7);
            CHECK(r.codes.size() == r.peeled.size() + 1);
        }
    }
}

TEST_CASE("membership rejections and errors") {
    PhiMembership b3 = phi_membership(fixture_b3());
    CHECK_FALSE(b3.member);
    CHECK(b3.reason.find("neither seed") != std::string::npos);

    // A claimed drawing of the non-1-planar clique join K4 + 3K1 cannot be
    // structurally valid; an empty rotation system is rejected, not an error.
    Drawing junk;
    junk.graph = Graph::join_complete_empty(4, 3);
    PhiMembership j = phi_membership(junk);
    CHECK_FALSE(j.member);
    CHECK(j.reason.find("invalid") != std::string::npos);

    CHECK_THROWS_AS(phi_membership(fixture_k5()), Error);
}

TEST_CASE("underlying graph classes per order") {
    auto classes = phi_graphs(9);
    CHECK(classes.at(7).size() == 1);
    CHECK(classes.at(8).size() == 1);
    CHECK(classes.at(9).size() == 2);
    for (const auto& [order, graphs] : classes) {
        for (const Graph& g : graphs) {
            CAPTURE(order);
            CHECK(vertex_connectivity(g).kappa == 4);
            CHECK(is_chordal(g).chordal);
            CHECK(is_k_tree(g, 4).is_k_tree);
        }
    }
}

TEST_CASE("atlas graphs at order 8 are exactly the 1-planar 4-trees") {
    auto classes = phi_graphs(8);
    std::set<std::vector<uint64_t>> from_phi;
    for (const Graph& g : classes.at(8)) from_phi.insert(canonical_form(g).code);

    std::set<std::vector<uint64_t>> from_oracle;
    std::vector<Graph> quads = all_k_trees(4, 8);
    CHECK(quads.size() == 5);
    for (const Graph& g : quads) {
        OnePlanarResult r = is_one_planar(g);
        REQUIRE(r.outcome != OnePlanarOutcome::exhausted);
        if (r.outcome == OnePlanarOutcome::found) from_oracle.insert(canonical_form(g).code);
    }
    CHECK(from_phi == from_oracle);
    CHECK(from_oracle.size() == 1);
}

TEST_CASE("uncrossed-face shapes match the reference patterns") {
    std::optional<PatternMatch> p1 = match_uncrossed_pattern(fixture_b1());
    REQUIRE(p1.has_value());
    CHECK(p1->pattern == 4);
    std::optional<PatternMatch> p2 = match_uncrossed_pattern(fixture_b2());
    REQUIRE(p2.has_value());
    CHECK(p2->pattern == 1);

    PhiAtlas atlas = generate_phi(9);
    for (const auto& [order, members] : atlas.by_order) {
        for (const PhiMember& m : members) {
            std::optional<PatternMatch> p = match_uncrossed_pattern(m.drawing);
            CAPTURE(order);
            REQUIRE(p.has_value());
            CHECK(p->pattern >= 1);
            CHECK(p->pattern <= 6);
            // vertex_map is injective into the member's vertex range.
            std::set<int> image(p->vertex_map.begin(), p->vertex_map.end());
            CHECK(image.size() == p->vertex_map.size());
            for (int v : p->vertex_map) {
                CHECK(v >= 0);
                CHECK(v < m.drawing.graph.n());
            }
        }
    }

    // Too small to carry any of the six shapes.
    CHECK_FALSE(match_uncrossed_pattern(fixture_k5()).has_value());
}
