#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opg/error.hpp"

namespace opg {

// An edge is always stored with its smaller endpoint first.
using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 0..n-1, capped at 64 vertices so a
// neighbourhood fits in one machine word.  The edge list is kept sorted
// lexicographically; edge indices used elsewhere (notably by drawings)
// refer to positions in that list.
class Graph {
  public:
    Graph() = default;

    // Validates and normalizes: endpoints in range, no loops, no duplicates.
    static Graph from_edge_list(int n, std::vector<Edge> edges);

    static Graph complete(int n);

    // Clique on k vertices (0..k-1) plus r pairwise non-adjacent vertices
    // (k..k+r-1) each adjacent to the whole clique.
    static Graph join_complete_empty(int k, int r);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    uint64_t adj_mask(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Index into edges() of {u,v}, or -1 if the edge is absent.
    int edge_index(int u, int v) const;

    uint64_t vertex_mask() const { return n_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1); }
    bool is_clique_mask(uint64_t mask) const;

    // Copy with one extra vertex (id n) adjacent to exactly `nbrs`.
    Graph add_vertex(const std::vector<int>& nbrs) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<Edge> edges_;
};

// Induced subgraph together with both directions of the relabelling.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id -> old id (increasing)
    std::vector<int> to_sub;       // old id -> new id, or -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, uint64_t keep_mask);

inline uint64_t vertex_list_mask(const std::vector<int>& vertices) {
    uint64_t mask = 0;
    for (int v : vertices) mask |= uint64_t{1} << v;
    return mask;
}

// Connected components as vertex masks, ordered by smallest member.
std::vector<uint64_t> components(const Graph& g);
bool is_connected(const Graph& g);

// Canonical labelling: the lexicographically smallest adjacency code over
// all vertex orderings.  code[i] holds the adjacency bits of canonical
// vertex i against canonical vertices j < i; perm[i] is the original id
// placed at canonical position i.  Equal codes <=> isomorphic graphs.
struct CanonicalForm {
    std::vector<uint64_t> code;
    std::vector<int> perm;
};

CanonicalForm canonical_form(const Graph& g);

// Isomorphism with witness (map from a's ids to b's ids).  Exact; guarded
// to n <= 16 since the search is exponential in principle.
std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b);

// Plain text interchange format: first line "n m", then m lines "u v"
// with 0-indexed endpoints, u < v, in lexicographic order.
Graph parse_edge_list_text(const std::string& text);
std::string format_edge_list_text(const Graph& g);

}  // namespace opg
