#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opg/drawing.hpp"
#include "opg/graph.hpp"

namespace opg {

// Default node budget for the crossing-set search.
inline constexpr std::uint64_t default_one_planar_budget = 4'000'000;

enum class OnePlanarOutcome { found, impossible, exhausted };

struct OnePlanarResult {
    OnePlanarOutcome outcome = OnePlanarOutcome::exhausted;
    std::optional<Drawing> drawing;  // present iff outcome == found
    std::string reason;              // human-readable for impossible/exhausted
    std::uint64_t nodes_explored = 0;
};

// Bounded exhaustive search for a drawing of g in which every edge is
// crossed at most once.  Branch-and-bound over per-edge decisions
// (uncrossed, or crossed with one specific partner) settles every
// crossing count in a single walk; a returned witness has the minimum
// number of crossings.  Pruning: edge-count bounds, planarity of the part
// of the drawing that is already forced, the best size found so far, and
// first-choice symmetry reduction.  Requires n <= 9; an exceeded budget
// is reported, never silent.
OnePlanarResult is_one_planar(const Graph& g,
                              std::uint64_t budget = default_one_planar_budget);

// All drawings of g up to drawing isomorphism, one representative per
// class, discovered via crossing-set enumeration.  Requires n <= 7.  A
// realizable crossing set whose planarization is not 3-connected cannot
// be classified this way (its sphere embedding is not unique); such sets
// are reported in `unresolved` and `complete` is cleared.
struct DrawingClassList {
    std::vector<std::string> codes;         // discovery order
    std::vector<Drawing> representatives;   // parallel to codes
    bool complete = true;
    std::vector<std::vector<std::pair<int, int>>> unresolved;  // edge-index pairs
};

DrawingClassList enumerate_drawings(const Graph& g);

// Unpruned reference search over every vertex-disjoint edge-pair matching,
// with no bounds, no ordering shortcuts and no symmetry reduction.
// Requires n <= 6.  min_crossings is -1 when nothing is realizable.
struct CrossingSearchReference {
    bool one_planar = false;
    int min_crossings = -1;
    std::uint64_t realizable_sets = 0;
};

CrossingSearchReference one_planar_reference(const Graph& g);

}  // namespace opg
