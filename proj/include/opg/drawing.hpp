#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opg/graph.hpp"

namespace opg {

// Planar arc of a planarization: segment `seg` of graph edge `edge`.
// Nodes 0..n-1 are the graph's vertices; node n+j is the crossing point of
// crossings[j].  Segment 0 starts at the edge's smaller endpoint, so an
// uncrossed edge is the single arc (u, v, e, 0) and a crossed edge {u,v}
// with crossing node x splits into (u, x, e, 0) and (x, v, e, 1).
struct Arc {
    int a = 0, b = 0;
    int edge = 0;
    int seg = 0;
    bool operator==(const Arc&) const = default;
};

// A drawing in which every edge is crossed at most once, stored purely
// combinatorially: the graph, the crossing matching (pairs of edge indices,
// each pair and the list itself sorted), and the rotation system of the
// planarization.  rotation[node] lists incident arc indices in cyclic
// order.  Arcs are always the canonical list produced by build_arcs.
struct Drawing {
    Graph graph;
    std::vector<std::pair<int, int>> crossings;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> rotation;

    int node_count() const { return graph.n() + static_cast<int>(crossings.size()); }
    bool is_crossing_node(int node) const { return node >= graph.n(); }
    // Crossing index pairing edge e, or -1 when e is uncrossed.
    int crossing_of_edge(int e) const;
    bool edge_is_crossed(int e) const { return crossing_of_edge(e) >= 0; }
    // The unique arc of edge e incident to a *vertex* node, or -1.
    int arc_at(int vertex, int e) const;
    // The unique arc with the given edge and segment, or -1.
    int arc_of_segment(int e, int seg) const;
    int arc_other_end(int arc_index, int node) const;
};

// Canonical arc list: for each edge in index order, its segment arcs.
std::vector<Arc> build_arcs(const Graph& g,
                            const std::vector<std::pair<int, int>>& crossings);

// Convenience constructor for crossing-free drawings: rotation given as
// neighbour lists in cyclic order (as produced by is_planar).
Drawing plane_drawing(const Graph& g, const std::vector<std::vector<int>>& neighbour_rotation);

struct Violation {
    std::string code;    // stable identifier, e.g. "adjacent-edges-cross"
    std::string detail;
};

// Checks every structural invariant; reports the first violation found.
std::optional<Violation> validate(const Drawing& d);
void require_valid(const Drawing& d);

// Darts: 2*arc for a->b, 2*arc+1 for b->a.
int dart_tail(const Drawing& d, int dart);
int dart_head(const Drawing& d, int dart);

struct Face {
    std::vector<int> darts;  // in traversal order
    bool crossed = false;    // some corner is a crossing node
};

// Face traversal of the rotation system, deterministic (each face starts at
// its smallest dart).
std::vector<Face> faces(const Drawing& d);

// Corner nodes in walk order (tails of the darts).
std::vector<int> face_nodes(const Drawing& d, const Face& f);

// The graph minus both edges of every crossing pair (vertex set kept).
Graph planar_skeleton(const Drawing& d);

// Ordered twin-face pair: f1 = [a,b,v1] and f2 = [a,b,v2] are uncrossed
// triangular faces sharing exactly the edge ab, with {a,b,v1,v2} a clique.
// Labels are oriented so that f1's walk traverses the dart b->a.
struct TwinPair {
    int f1 = 0, f2 = 0;
    int a = 0, b = 0, v1 = 0, v2 = 0;
};

std::vector<TwinPair> twin_faces(const Drawing& d);

// Insert a new vertex x inside f1, joined to a, b, v1 without crossings and
// to v2 by an edge crossing ab.  (f1, f2) must be an ordered twin pair.
Drawing four_join(const Drawing& d, int f1, int f2);

// The other face incident with the uncrossed edge `e` on the boundary of
// `face` (the face itself if e borders it on both sides).
int opposite_face(const Drawing& d, int face, int e);

// Upper bound on the degree of a vertex insertable into `face`: uncrossed
// corners plus boundary occurrences of uncrossed edges whose opposite face
// has at least three uncrossed corners.
int insertion_capacity(const Drawing& d, int face);

// Restriction to the edges lying on some uncrossed face's boundary and
// their incident vertices; rotation order of retained arcs is preserved.
struct SkeletonRestriction {
    Drawing drawing;
    std::vector<int> to_original;  // new vertex id -> old vertex id
};
SkeletonRestriction uncrossed_face_skeleton(const Drawing& d);

// Delete vertex v: incident edges disappear and any crossing involving
// them dissolves (the partner edge becomes uncrossed).  host_face is the
// face of the result that covers v's old position, or -1 when the result
// has no faces.
struct VertexRemoval {
    Drawing drawing;
    std::vector<int> to_original;
    int host_face = -1;
};
VertexRemoval remove_vertex(const Drawing& d, int v);

// Canonical code, equal for two drawings iff some sphere homeomorphism
// (reflections included) maps one to the other.  Minimum over all starting
// darts and both orientations of a breadth-first traversal code with node
// kinds distinguished.  Requires a connected planarization.
std::string drawing_code(const Drawing& d);

// JSON interchange (canonical key order, byte-stable for equal drawings).
std::string serialize_drawing(const Drawing& d);
Drawing parse_drawing(const std::string& text);

}  // namespace opg
