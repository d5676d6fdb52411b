#pragma once

#include <vector>

#include "opg/graph.hpp"

namespace opg {

// Exact nonnegative rational, normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long n, long long d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const;
};

// kappa with a witness: a minimum separating set (empty when the graph is
// disconnected, absent for complete graphs, where kappa = n - 1 by
// convention and no separator exists).
struct ConnectivityResult {
    int kappa = 0;
    bool complete = false;
    std::vector<int> separator;
};

// Menger route: minimum over non-adjacent pairs (s,t) of the maximum number
// of internally vertex-disjoint s-t paths, computed by unit-capacity
// max-flow on the vertex-split digraph.
ConnectivityResult vertex_connectivity(const Graph& g);

// Independent oracle: smallest vertex subset whose removal disconnects the
// graph, by subset enumeration in increasing size.  Exponential; for tests.
int vertex_connectivity_bruteforce(const Graph& g);

// min |X| / c(G - X) over vertex sets X with c(G - X) >= 2, as an exact
// rational; complete graphs have no such X and report `infinite`.
// Exhaustive over subsets, guarded to `max_n` vertices.  Among minimizing
// cuts the witness is the one with fewest vertices, then lexicographically
// smallest.
struct ToughnessResult {
    bool infinite = false;
    Rational value;
    std::vector<int> cut;
};

ToughnessResult toughness(const Graph& g, int max_n = 18);

// kappa >= ceil(2 * toughness); vacuously true for complete graphs.
bool check_chvatal_bound(const Graph& g, int max_n = 18);

// Number of connected components after deleting `cut`.
int component_count_after_removal(const Graph& g, uint64_t cut_mask);

}  // namespace opg
