#pragma once

// Shared test utilities: deterministic RNG, small-graph corpora, and a few
// named graphs used across test modules.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "opg/graph.hpp"

namespace opg::testing {

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound).
    uint64_t below(uint64_t bound) { return next() % bound; }
    bool coin(double p) { return (next() >> 11) * 0x1.0p-53 < p; }
};

// All vertex pairs u < v in lexicographic order; bit i of an "edge mask"
// refers to pair_list(n)[i].
inline std::vector<Edge> pair_list(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

inline Graph graph_from_mask(int n, const std::vector<Edge>& pairs, uint64_t mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
    return Graph::from_edge_list(n, edges);
}

inline Graph random_graph(int n, double p, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

// Random permuted copy of g plus the permutation used (old id -> new id).
inline std::pair<Graph, std::vector<int>> shuffled_copy(const Graph& g, SplitMix64& rng) {
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    for (int i = g.n() - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(i + 1)));
        std::swap(perm[i], perm[j]);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int a = perm[u], b = perm[v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return {Graph::from_edge_list(g.n(), edges), perm};
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph::from_edge_list(n, edges);
}

inline Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::from_edge_list(leaves + 1, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.push_back({u, v});
    return Graph::from_edge_list(a + b, edges);
}

inline Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
        edges.push_back({i, i + 5});
        edges.push_back({std::min(i + 5, (i + 2) % 5 + 5), std::max(i + 5, (i + 2) % 5 + 5)});
    }
    return Graph::from_edge_list(10, edges);
}

inline Graph cube_q3() {
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (int v = u ^ (1 << b); u < v) edges.push_back({u, v});
    return Graph::from_edge_list(8, edges);
}

// Random k-tree grown by repeatedly attaching a new vertex to a random
// existing k-clique (a face of the construction).
inline Graph random_k_tree_for_tests(int k, int n, SplitMix64& rng) {
    Graph g = Graph::complete(k + 1);
    std::vector<std::vector<int>> cliques;
    for (int subset = 0; subset < (1 << (k + 1)); ++subset)
        if (std::popcount(static_cast<unsigned>(subset)) == k) {
            std::vector<int> c;
            for (int v = 0; v <= k; ++v)
                if (subset >> v & 1) c.push_back(v);
            cliques.push_back(c);
        }
    while (g.n() < n) {
        std::vector<int> host = cliques[rng.below(cliques.size())];
        int fresh = g.n();
        g = g.add_vertex(host);
        for (size_t drop = 0; drop < host.size(); ++drop) {
            std::vector<int> c;
            for (size_t i = 0; i < host.size(); ++i)
                if (i != drop) c.push_back(host[i]);
            c.push_back(fresh);
            cliques.push_back(c);
        }
    }
    return g;
}

}  // namespace opg::testing
