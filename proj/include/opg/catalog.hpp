#pragma once

#include <vector>

#include "opg/drawing.hpp"
#include "opg/graph.hpp"

namespace opg {

// An edge drawn as a polyline from u through the bend points to v.
struct PolylineEdge {
    int u = 0, v = 0;                                  // u < v
    std::vector<std::pair<long long, long long>> bends;  // listed from u to v
};

// Straight-line / polyline layout with integer coordinates.  The layout
// must be in general position: distinct points, no vertex or bend on a
// foreign edge, all edge intersections transversal and pairwise distinct.
struct GeometricLayout {
    std::vector<std::pair<long long, long long>> points;  // one per vertex
    std::vector<PolylineEdge> edges;
};

// Derives the crossing set and the rotation system from the geometry with
// exact integer arithmetic and returns the validated drawing.
Drawing drawing_from_layout(const GeometricLayout& layout);

// Reference drawings used throughout the test-suite.  The two complete
// graphs use their classical drawings (one crossing for K5, a triangle
// inside a triangle for K6).
Drawing fixture_k5();
Drawing fixture_k6();

// Three drawings of 6-vertex complete graphs minus one edge; a1 has two
// crossings, a2 and a3 have three.
Drawing fixture_a1();
Drawing fixture_a2();
Drawing fixture_a3();

// Three 7-vertex drawings extending a1's graph by one degree-4 vertex:
// b1 and b2 are the two 4-joins into a1's twin pair sharing edge {4, 5};
// b3 draws an isomorphic graph with four crossings.
Drawing fixture_b1();
Drawing fixture_b2();
Drawing fixture_b3();

// A 13-vertex chordal graph drawn with one crossing; 3-connected but not
// 4-connected, and not 1-tough.
Drawing fixture_g0();

// Crossing-free kite patterns (k in 1..6): the shapes taken by restricted
// skeletons around a removed pair of degree-4 vertices.  d3 is a disjoint
// union of two kites; d4/d5/d6 glue two kites at a single vertex.
Drawing fixture_d_pattern(int k);

}  // namespace opg
