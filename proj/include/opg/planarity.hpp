#pragma once

#include <vector>

#include "opg/graph.hpp"

namespace opg {

// A combinatorial sphere embedding: rotation[v] lists the neighbours of v
// in cyclic order.  When `planar` is false the rotation is empty.
struct PlanarEmbedding {
    bool planar = false;
    std::vector<std::vector<int>> rotation;
};

// Planarity test that emits an embedding, not just a verdict.  Works
// per biconnected block (incremental face embedding: grow an embedded
// subgraph by laying a path of an unembedded fragment into a face
// containing all of the fragment's attachments), then merges block
// rotations at cut vertices.  Deterministic for fixed input.
PlanarEmbedding is_planar(const Graph& g);

// Number of face orbits traced by next(dart) = rotation-successor of the
// reversed dart.  For a connected embedded graph with at least one edge,
// the embedding is planar iff V - E + F = 2.
int count_rotation_faces(const Graph& g, const std::vector<std::vector<int>>& rotation);

}  // namespace opg
