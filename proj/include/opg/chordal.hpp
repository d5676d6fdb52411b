#pragma once

#include <vector>

#include "opg/graph.hpp"

namespace opg {

// Maximum-cardinality search visit order.  The next vertex is always an
// unvisited one with the most visited neighbours, ties broken by smallest
// id, so the order is deterministic.  Disconnected graphs are handled
// naturally (a fresh component starts when all weights are zero).
std::vector<int> mcs_order(const Graph& g);

// Exactly one of the two certificates is populated:
//  - chordal: `peo` is a perfect elimination order (first eliminated first);
//  - not chordal: `hole` is an induced cycle of length >= 4.
struct ChordalResult {
    bool chordal = false;
    std::vector<int> peo;
    std::vector<int> hole;
};

ChordalResult is_chordal(const Graph& g);

// Certificate checkers, deliberately independent of how the certificates
// were produced.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);
bool is_hole(const Graph& g, const std::vector<int>& cycle);

bool is_simplicial(const Graph& g, int v);
std::vector<int> simplicial_vertices(const Graph& g);

// k-tree recognition by greedy peeling: repeatedly delete the smallest-id
// simplicial vertex of degree exactly k until k vertices remain, then check
// the remainder is a clique.  Any simplicial vertex of a k-tree works, so
// the deterministic greedy is exact.  `peel_order` lists the deletions;
// reading it backwards (after the base clique) is a construction order.
struct KTreeResult {
    bool is_k_tree = false;
    std::vector<int> peel_order;
    std::vector<int> base_clique;
};

KTreeResult is_k_tree(const Graph& g, int k);

// Every k-tree on `n` vertices, one representative per isomorphism class.
// Breadth-first construction from K_k: each level attaches one new vertex to
// every k-clique of every class from the previous level, deduplicating by
// canonical form.  Guarded to n <= 10.
std::vector<Graph> all_k_trees(int k, int n);

// All minimal separators, as vertex masks.  A set S is a minimal separator
// iff at least two components of G - S have all of S in their neighbourhood.
// Exhaustive over subsets; guarded to n <= 14.
std::vector<uint64_t> minimal_separators(const Graph& g);

// Checks the separator/clique characterization of chordality directly.
// On failure, `counterexample` holds a minimal separator inducing a non-edge.
struct SeparatorCliqueResult {
    bool all_cliques = true;
    std::vector<int> counterexample;
};

SeparatorCliqueResult minimal_separators_are_cliques(const Graph& g);

}  // namespace opg
