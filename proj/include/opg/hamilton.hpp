#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opg/graph.hpp"

namespace opg {

// An ordered listing of every vertex exactly once, consecutive vertices
// adjacent, running from the first requested endpoint to the second.
struct HamPath {
    std::vector<int> sequence;
};

// Independent validity check: `p` is a permutation of 0..n-1, consecutive
// vertices are adjacent, and the endpoints are x (front) and y (back).
bool is_ham_path(const Graph& g, const HamPath& p, int x, int y);

// Exhaustive backtracking for a Hamiltonian x-y path.  Prunes a branch
// when the unvisited region is disconnected from the growing end, when an
// unvisited interior vertex has fewer than two usable neighbours left, and
// follows forced moves (a vertex whose only remaining options are the
// current end plus one other must come next).  Exact; guarded to n <= 15.
std::optional<HamPath> oracle_ham_path(const Graph& g, int x, int y);

// Hamiltonian cycle oracle by anchored path queries: a cycle exists iff
// some neighbour w of vertex 0 admits a Hamiltonian 0-w path.  Returns the
// cycle as a vertex sequence whose last entry is adjacent to its first.
// Exact; guarded to n <= 15.
std::optional<std::vector<int>> oracle_ham_cycle(const Graph& g);

// All-pairs Hamiltonian-path verdict; `failing_pair` is the first pair in
// lexicographic order with no path.  Guarded to n <= 12.
struct HamConnectedResult {
    bool connected = false;
    std::optional<std::pair<int, int>> failing_pair;
};

HamConnectedResult oracle_ham_connected(const Graph& g);

// One combination step of the constructive path builder.  Hypotheses
// (checked, violations named individually): d(u) >= 3, the closed
// neighbourhood of u lies inside that of a, and a has at most one
// neighbour outside N[u].  `sub` is a Hamiltonian path of g - u (or of
// g - {u, a} when a is a requested endpoint) supplied by the caller, and
// the result is a Hamiltonian x-y path of g:
//   - u an endpoint: `sub` must run from some b in N(u) to the other
//     endpoint; u is prepended.
//   - neither u nor a an endpoint: `sub` must run from x to y; some path
//     edge at a has its other end b in N(u) (guaranteed by the
//     hypotheses) and is replaced by the detour a-u-b.  If both edges at
//     a qualify, the one nearer x is replaced.
//   - a an endpoint, u not: `sub` must be a path of g - {u, a} from some
//     b in N(u) to the other endpoint; a-u is prepended.
HamPath splice_extend(const Graph& g, int u, int a, int x, int y, const HamPath& sub);

// Constructive Hamiltonian x-y path in a k-tree (k >= 3) that is complete
// or has exactly two simplicial vertices.  Orders up to k+2 are solved
// directly (complete: endpoints around the sorted interior; one missing
// edge: shortest exhaustive order search); larger orders remove the
// smaller-id simplicial vertex u (preferring one that is not a requested
// endpoint), name `a` the simplicial vertex of g - u that u exposed,
// recurse, and reattach with splice_extend.  Every emitted path passes
// is_ham_path before being returned.
HamPath ktree_ham_path(const Graph& g, int k, int x, int y);

// Full dispatch for the x-y path guarantee on 4-connected chordal graphs
// that admit a drawing with at most one crossing per edge.  Checks the
// polynomial-time hypotheses itself: chordality and connectivity >= 4
// (else `reason` names the failure), orders 5 and 6 solved directly; from
// order 7 on the graph must be a 4-tree with exactly two simplicial
// vertices — when that fails, no drawing with at most one crossing per
// edge can exist alongside the verified hypotheses, and `reason` says so.
// Whether such a drawing actually exists is never decided here; callers
// wanting that certainty must supply it separately (e.g. by exhaustive
// search at small scale).
struct TheoremHamResult {
    std::optional<HamPath> path;
    std::string reason;  // set exactly when no path is returned
};

TheoremHamResult theorem_ham_path(const Graph& g, int x, int y);

}  // namespace opg
