#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "opg/drawing.hpp"
#include "opg/graph.hpp"

namespace opg {

// A graph together with a validated drawing of it.
struct GraphWithDrawing {
    Graph graph;
    Drawing drawing;
};

// The 13-vertex seed of the gluing family, drawn with one crossing:
// chordal, 3-connected but not 4-connected, non-planar (it contains a
// complete graph on {0, 1, 2, 11, 12}), and not Hamiltonian — removing
// {0, 1, 3, 5, 7} leaves six components.
GraphWithDrawing g0();

// Faces of `d` eligible as gluing sites: faces bounded by three distinct
// vertices whose corners are all vertices and whose three boundary edges
// are uncrossed.  Indices refer to faces(d), in increasing order.
std::vector<int> qualifying_faces(const Drawing& d);

// Gluing request: paste a fresh copy of g0() into face `face` of `host`,
// identifying the face's vertices attach[0], attach[1], attach[2] with
// the copy's vertices 0, 11, 12 respectively.  `attach` may list the
// face's vertices in any order; the copy is mirrored when needed so the
// two drawings fit together on the sphere.
struct GlueSpec {
    Drawing host;
    int face = 0;
    std::array<int, 3> attach{};
};

// One gluing step.  copy_ids[i] is the vertex of `graph` that carries
// copy vertex i: copy_ids[0], copy_ids[11], copy_ids[12] are the attach
// vertices and the remaining ten are fresh ids appended in increasing i.
struct GlueResult {
    Graph graph;
    Drawing drawing;
    std::array<int, 13> copy_ids{};
};

GlueResult glue_g0(const GlueSpec& spec);

// `depth` successive gluings starting from g0() (depth 0 is g0() itself),
// each into the first qualifying face of the current drawing with attach
// vertices taken in face-walk order.  The result has 13 + 10*depth
// vertices.  obstruction_cut is a five-vertex cut whose removal leaves
// six components, certifying at every depth that no spanning cycle
// exists without any search.
struct GlueChainResult {
    Graph graph;
    Drawing drawing;
    std::vector<int> obstruction_cut;
};

GlueChainResult glue_chain(int depth);

// Name and version of the deterministic pseudo-random generator behind
// the seeded builders below; generated corpora are stable for a given
// (algorithm, seed) pair across releases.
constexpr const char* kGeneratorAlgorithm = "splitmix64/v1";

// Seed-deterministic random k-tree on n vertices: start from a complete
// graph on k+1 vertices and repeatedly attach a fresh vertex to a
// uniformly chosen k-clique.  Requires k >= 1 and n >= k + 1.
Graph random_k_tree(int n, int k, std::uint64_t seed);

// Seed-deterministic k-tree with exactly two simplicial vertices, built
// by a rolling k-clique front: each fresh vertex is attached to the
// front and then replaces a uniformly chosen front member.  The
// simplicial count is re-checked after construction and the build is
// retried with a perturbed stream on the (never yet observed) chance of
// a miss; exhausting the retry budget raises an internal error rather
// than returning a non-conforming graph.  Requires k >= 1, n >= k + 2.
Graph two_simplicial_k_tree(int n, int k, std::uint64_t seed);

}  // namespace opg
