#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opg/drawing.hpp"
#include "opg/graph.hpp"

namespace opg {

// One drawing in the phi atlas.  Seeds (order 7) have parent -1; every
// other member records the member index of its parent at the previous
// order and the ordered twin-face pair of the parent it was joined into.
struct PhiMember {
    Drawing drawing;
    std::string code;
    int parent = -1;
    int parent_f1 = -1;
    int parent_f2 = -1;
};

// Levelled closure of the two seed drawings under the degree-4 vertex
// join: by_order[n] lists the members with n vertices, sorted by code.
struct PhiAtlas {
    int max_order = 7;
    std::map<int, std::vector<PhiMember>> by_order;

    const PhiMember* find(int order, const std::string& code) const;
};

// Breadth-first generation: start from the two order-7 seed drawings,
// apply the degree-4 vertex join to every ordered twin-face pair of every
// member, and deduplicate each level by canonical drawing code.
// max_order must be at least 7 and at most hard_cap (growth is
// exponential).
PhiAtlas generate_phi(int max_order, int hard_cap = 12);

// Membership test by peeling: repeatedly remove a simplicial degree-4
// vertex from the drawing (trying every candidate before giving up) and
// accept when the order-7 base is one of the two seeds.  `codes` holds
// the canonical code at every level from the input down to the base;
// `peeled` holds the vertex removed at each level, numbered in that
// level's drawing.  Structurally invalid drawings are rejected with the
// violation in `reason`; drawings of order < 7 are an error.
struct PhiMembership {
    bool member = false;
    std::string reason;
    std::vector<int> peeled;
    std::vector<std::string> codes;
};

PhiMembership phi_membership(const Drawing& d);

// Underlying graphs of the atlas per order, one representative per
// isomorphism class, in first-appearance order (members scanned by code).
std::map<int, std::vector<Graph>> phi_graphs(int max_order);

// Shape taken by the subdrawing spanned by uncrossed-face boundaries:
// match against the six reference kite patterns.  A match must be a
// drawing isomorphism (rotations preserved up to one global reflection)
// through which the four designated pattern faces are faces of d forming
// two twin pairs, and, for the two chained patterns, the three designated
// vertex pairs are non-edges of d's graph.  vertex_map sends pattern
// vertex ids to d's vertex ids.
struct PatternMatch {
    int pattern = 0;  // 1..6
    std::vector<int> vertex_map;
};

std::optional<PatternMatch> match_uncrossed_pattern(const Drawing& d);

}  // namespace opg
