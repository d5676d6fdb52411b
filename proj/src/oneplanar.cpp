#include "opg/oneplanar.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "opg/connectivity.hpp"
#include "opg/error.hpp"
#include "opg/planarity.hpp"

namespace opg {

namespace {

using PairList = std::vector<std::pair<int, int>>;  // edge-index pairs

// All candidate crossings: vertex-disjoint edge pairs in lexicographic
// order of (smaller index, larger index).
PairList candidate_pairs(const Graph& g) {
    PairList out;
    for (int i = 0; i < g.m(); ++i) {
        auto [a, b] = g.edges()[i];
        for (int j = i + 1; j < g.m(); ++j) {
            auto [c, d] = g.edges()[j];
            if (a != c && a != d && b != c && b != d) out.push_back({i, j});
        }
    }
    return out;
}

// The alternation-enforcing planarization of a chosen crossing set, plus
// any subset of the remaining edges.  Each pair (e, f) with e = {u, v},
// f = {s, t} contributes a crossing node c joined to u, s, v, t and a rim
// cycle u - s - v - t subdivided once per side: in a planar embedding the
// spokes of this subdivided wheel must leave c in rim order, which is
// exactly the alternation a transversal crossing requires.  Conversely a
// drawing realizing the crossing set yields a planar embedding of this
// graph by routing the rim alongside the crossing.  So the crossing set
// is realizable if and only if this graph is planar.
struct GadgetGraph {
    Graph h;
    bool representable = false;  // false when 64 nodes would not suffice
};

GadgetGraph gadget_graph(const Graph& g, const PairList& chosen,
                         std::uint64_t uncrossed_mask) {
    const int n = g.n();
    const int k = static_cast<int>(chosen.size());
    GadgetGraph out;
    if (n + 5 * k > 64) return out;
    std::vector<Edge> edges;
    for (int e = 0; e < g.m(); ++e)
        if (uncrossed_mask >> e & 1) edges.push_back(g.edges()[e]);
    for (int idx = 0; idx < k; ++idx) {
        auto [u, v] = g.edges()[chosen[idx].first];
        auto [s, t] = g.edges()[chosen[idx].second];
        int c = n + 5 * idx;
        int rim[4] = {c + 1, c + 2, c + 3, c + 4};
        int ends[4] = {u, s, v, t};
        for (int q = 0; q < 4; ++q) {
            edges.push_back(std::minmax(c, ends[q]));
            edges.push_back(std::minmax(ends[q], rim[q]));
            edges.push_back(std::minmax(rim[q], ends[(q + 1) % 4]));
        }
    }
    out.h = Graph::from_edge_list(n + 5 * k, edges);
    out.representable = true;
    return out;
}

std::uint64_t edge_bit(int e) { return std::uint64_t(1) << e; }

std::uint64_t all_edges_mask(const Graph& g) {
    return g.m() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.m()) - 1;
}

// Turns a planar embedding of the gadget graph into a drawing of g with
// the chosen crossings: crossing-node rotations map spoke-wise to edge
// segments, vertex rotations keep their cyclic order with rim nodes
// dropped.
Drawing extract_drawing(const Graph& g, const PairList& chosen,
                        const PlanarEmbedding& emb) {
    const int n = g.n();
    Drawing d;
    d.graph = g;
    for (auto [i, j] : chosen) d.crossings.push_back({i, j});
    std::sort(d.crossings.begin(), d.crossings.end());
    d.arcs = build_arcs(g, d.crossings);

    // Crossing index by gadget node, and crossed edge by (pair, endpoint).
    std::map<std::pair<int, int>, int> crossed_edge_at;  // (gadget c, endpoint) -> edge
    std::map<int, int> pair_of_gadget_node;
    for (int idx = 0; idx < static_cast<int>(chosen.size()); ++idx) {
        int c = n + 5 * idx;
        pair_of_gadget_node[c] = idx;
        for (int e : {chosen[idx].first, chosen[idx].second}) {
            auto [u, v] = g.edges()[e];
            crossed_edge_at[{c, u}] = e;
            crossed_edge_at[{c, v}] = e;
        }
    }
    auto segment_arc = [&](int e, int endpoint) {
        return d.arc_of_segment(e, endpoint == g.edges()[e].first ? 0 : 1);
    };

    d.rotation.assign(d.node_count(), {});
    for (int v = 0; v < n; ++v) {
        for (int nb : emb.rotation[v]) {
            if (nb < n) {
                int e = g.edge_index(v, nb);
                check_internal(e >= 0, "gadget rotation lists a non-edge");
                d.rotation[v].push_back(d.arc_at(v, e));
            } else if (auto it = pair_of_gadget_node.find(nb);
                       it != pair_of_gadget_node.end()) {
                int e = crossed_edge_at.at({nb, v});
                d.rotation[v].push_back(segment_arc(e, v));
            }
            // rim subdivision nodes are dropped
        }
    }
    for (int idx = 0; idx < static_cast<int>(chosen.size()); ++idx) {
        int c = n + 5 * idx;
        std::pair<int, int> key{chosen[idx].first, chosen[idx].second};
        int node = n + static_cast<int>(std::find(d.crossings.begin(), d.crossings.end(),
                                                  key) -
                                        d.crossings.begin());
        for (int nb : emb.rotation[c]) {
            check_internal(nb < n, "crossing node rotation lists a rim node");
            d.rotation[node].push_back(segment_arc(crossed_edge_at.at({c, nb}), nb));
        }
    }
    require_valid(d);
    return d;
}

// Realizability test for one complete crossing set.
std::optional<Drawing> attempt_realize(const Graph& g, const PairList& chosen) {
    std::uint64_t used = 0;
    for (auto [i, j] : chosen) used |= edge_bit(i) | edge_bit(j);
    GadgetGraph gg = gadget_graph(g, chosen, all_edges_mask(g) & ~used);
    if (!gg.representable) return std::nullopt;
    PlanarEmbedding emb = is_planar(gg.h);
    if (!emb.planar) return std::nullopt;
    return extract_drawing(g, chosen, emb);
}

// Shared state of the pruned crossing-set enumeration.
struct Search {
    const Graph& g;
    PairList pairs;
    std::vector<std::uint64_t> suffix_mask;  // edges crossable from position t on
    PairList chosen;
    std::uint64_t used = 0;

    explicit Search(const Graph& graph) : g(graph) {
        pairs = candidate_pairs(g);
        suffix_mask.assign(pairs.size() + 1, 0);
        for (int t = static_cast<int>(pairs.size()) - 1; t >= 0; --t)
            suffix_mask[t] =
                suffix_mask[t + 1] | edge_bit(pairs[t].first) | edge_bit(pairs[t].second);
    }

    // Edges that no pair at position >= t can cross are locked uncrossed;
    // the gadget graph of the chosen pairs plus those locked edges is a
    // subgraph of the gadget graph of every extension, so its
    // non-planarity refutes the whole subtree.
    bool subtree_feasible(int t) {
        std::uint64_t locked = all_edges_mask(g) & ~used & ~suffix_mask[t];
        GadgetGraph gg = gadget_graph(g, chosen, locked);
        if (!gg.representable) return true;  // cannot test; do not prune
        return is_planar(gg.h).planar;
    }
};
// Branch-and-bound search over crossing sets, driven by subgraph
// demands.  Restricting a drawing to an induced subgraph S keeps it a
// drawing, so S needs at least m_S - 3 n_S + 6 chosen pairs entirely
// inside it; while some demand is unmet the search branches only on the
// usable pairs inside the tightest such subgraph (with an exclusion set
// making the enumeration duplicate-free), which keeps the branching
// factor tiny on dense graphs.  A single walk settles every crossing
// count: the gadget graph of the chosen pairs plus provably uncrossable
// edges is a subgraph of the gadget graph of every completion, so its
// non-planarity prunes, and a found drawing bounds the crossing count of
// everything still worth exploring.
struct CoverSearch {
    // Pair-index sets, sized for every vertex-disjoint pair on m <= 36.
    struct PairSet {
        std::array<std::uint64_t, 8> w{};

        void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
        bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }
        int count() const {
            int c = 0;
            for (std::uint64_t x : w) c += std::popcount(x);
            return c;
        }
        bool intersects(const PairSet& o) const {
            for (int i = 0; i < 8; ++i)
                if (w[i] & o.w[i]) return true;
            return false;
        }
        PairSet operator&(const PairSet& o) const {
            PairSet r;
            for (int i = 0; i < 8; ++i) r.w[i] = w[i] & o.w[i];
            return r;
        }
        template <typename F>
        void for_each(F&& f) const {
            for (int i = 0; i < 8; ++i)
                for (std::uint64_t x = w[i]; x; x &= x - 1)
                    f(i * 64 + std::countr_zero(x));
        }
    };

    const Graph& g;
    int k_lo = 1;  // Euler lower bound on the crossing count
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool unrepresentable = false;  // some assignment outgrew the gadget cap

    PairList pairs;
    std::vector<std::uint64_t> pair_edges;   // edge mask per pair
    std::vector<PairSet> pairs_with_edge;    // pair indices touching edge e

    struct SubgraphDemand {
        std::uint64_t edge_mask = 0;
        int demand = 0;
        PairSet inside;  // pairs with both edges in the subgraph
    };
    std::vector<SubgraphDemand> demands;

    PairList chosen;
    std::uint64_t crossed = 0;
    PairSet excluded;

    int best = std::numeric_limits<int>::max();
    std::optional<Drawing> witness;

    explicit CoverSearch(const Graph& graph) : g(graph) {
        pairs = candidate_pairs(g);
        check_internal(pairs.size() <= 512, "pair list exceeds the search word size");
        pair_edges.reserve(pairs.size());
        pairs_with_edge.assign(g.m(), {});
        for (int q = 0; q < static_cast<int>(pairs.size()); ++q) {
            auto [i, j] = pairs[q];
            pair_edges.push_back(edge_bit(i) | edge_bit(j));
            pairs_with_edge[i].set(q);
            pairs_with_edge[j].set(q);
        }
        collect_demands();
    }

    void collect_demands() {
        const int n = g.n();
        for (std::uint64_t vs = 0; vs < (std::uint64_t(1) << n); ++vs) {
            int nv = std::popcount(vs);
            if (nv < 5) continue;
            std::uint64_t em = 0;
            int me = 0;
            for (int e = 0; e < g.m(); ++e) {
                auto [a, b] = g.edges()[e];
                if ((vs >> a & 1) && (vs >> b & 1)) {
                    em |= edge_bit(e);
                    ++me;
                }
            }
            int demand = me - 3 * nv + 6;
            if (demand < 1) continue;
            SubgraphDemand sd;
            sd.edge_mask = em;
            sd.demand = demand;
            for (int q = 0; q < static_cast<int>(pairs.size()); ++q)
                if ((pair_edges[q] & em) == pair_edges[q]) sd.inside.set(q);
            demands.push_back(sd);
        }
    }

    // Returns true when the whole search should stop.
    bool run() {
        if (++nodes > budget) {
            out_of_budget = true;
            return true;
        }
        int k = static_cast<int>(chosen.size());
        if (k >= best) return false;

        // Pairs still usable below this node.
        PairSet usable;
        for (int q = 0; q < static_cast<int>(pairs.size()); ++q)
            if (!excluded.test(q) && !(pair_edges[q] & crossed)) usable.set(q);

        std::uint64_t open = all_edges_mask(g) & ~crossed;
        if (k + std::min(usable.count(), std::popcount(open) / 2) < k_lo) return false;

        // Demand bookkeeping: arithmetic infeasibility, then the tightest
        // unmet demand as the branching target.
        int target = -1, target_usable = 0;
        for (int di = 0; di < static_cast<int>(demands.size()); ++di) {
            const SubgraphDemand& sd = demands[di];
            int inside = 0;
            for (auto [e, f] : chosen)
                inside += (sd.edge_mask >> e & 1) && (sd.edge_mask >> f & 1);
            if (inside >= sd.demand) continue;
            PairSet open_inside = usable & sd.inside;
            int u = open_inside.count();
            int supply = std::min(u, std::popcount(sd.edge_mask & open) / 2);
            if (inside + supply < sd.demand) return false;
            if (target < 0 || u < target_usable) {
                target = di;
                target_usable = u;
            }
        }

        if (target < 0) {
            // Every demand is met; the chosen set may already be a drawing.
            GadgetGraph gg = gadget_graph(g, chosen, open);
            if (!gg.representable) {
                unrepresentable = true;
            } else {
                PlanarEmbedding emb = is_planar(gg.h);
                if (emb.planar) {
                    best = k;
                    witness = extract_drawing(g, chosen, emb);
                    return best == k_lo;  // the lower bound is met
                }
            }
        }

        if (!chosen.empty()) {
            // Edges no usable pair can cross any more are locked uncrossed.
            std::uint64_t locked = 0;
            for (std::uint64_t rest = open; rest; rest &= rest - 1) {
                int e = std::countr_zero(rest);
                if (!pairs_with_edge[e].intersects(usable)) locked |= edge_bit(e);
            }
            GadgetGraph gg = gadget_graph(g, chosen, locked);
            if (!gg.representable)
                unrepresentable = true;
            else if (!is_planar(gg.h).planar)
                return false;
        }

        PairSet branch = target >= 0 ? (usable & demands[target].inside) : usable;
        bool stop = false;
        PairSet undo;
        branch.for_each([&](int q) {
            if (stop) return;
            chosen.push_back(pairs[q]);
            crossed |= pair_edges[q];
            stop = run();
            crossed &= ~pair_edges[q];
            chosen.pop_back();
            if (!stop) {
                excluded.set(q);  // later siblings may not re-add this pair
                undo.set(q);
            }
        });
        // Restore the exclusions added at this node.
        for (int i = 0; i < 8; ++i) excluded.w[i] &= ~undo.w[i];
        return stop;
    }
};

}  // namespace

OnePlanarResult is_one_planar(const Graph& g, std::uint64_t budget) {
    if (g.n() > 9) throw_scale("is_one_planar handles at most 9 vertices");
    OnePlanarResult res;
    const int n = g.n(), m = g.m();

    if (n >= 3) {
        int bound = (n == 7 || n == 9) ? 4 * n - 9 : 4 * n - 8;
        if (m > bound) {
            res.outcome = OnePlanarOutcome::impossible;
            res.reason = std::to_string(m) + " edges exceed the " + std::to_string(bound) +
                         " permitted in a drawing on " + std::to_string(n) +
                         " vertices with at most one crossing per edge";
            return res;
        }
    }

    PlanarEmbedding plain = is_planar(g);
    if (plain.planar) {
        res.outcome = OnePlanarOutcome::found;
        res.drawing = plane_drawing(g, plain.rotation);
        res.nodes_explored = 1;
        return res;
    }

    CoverSearch search(g);
    search.budget = budget;
    search.k_lo = std::max(1, m - 3 * n + 6);
    search.run();
    res.nodes_explored = search.nodes;
    if (search.out_of_budget) {
        res.outcome = OnePlanarOutcome::exhausted;
        res.reason = "search budget of " + std::to_string(budget) +
                     " nodes exhausted; no verdict";
    } else if (search.witness) {
        res.outcome = OnePlanarOutcome::found;
        res.drawing = std::move(search.witness);
    } else if (search.unrepresentable) {
        res.outcome = OnePlanarOutcome::exhausted;
        res.reason = "some crossing assignments exceed the representable size; no verdict";
    } else {
        res.outcome = OnePlanarOutcome::impossible;
        res.reason = "non-planar and every crossing assignment is refuted";
    }
    return res;
}

DrawingClassList enumerate_drawings(const Graph& g) {
    if (g.n() > 7) throw_scale("enumerate_drawings handles at most 7 vertices");
    DrawingClassList out;
    const int n = g.n(), m = g.m();
    const int k_lo = std::max(0, m - 3 * n + 6);

    Search search(g);  // reuse pair list + subtree pruning state
    std::set<std::string> seen_codes;

    // Examines the current chosen set, then extends it with pairs >= t.
    auto visit = [&](auto&& self, int t) -> void {
        if (static_cast<int>(search.chosen.size()) >= k_lo) {
            if (std::optional<Drawing> d = attempt_realize(g, search.chosen)) {
                // Planarization with plain degree-4 crossing nodes; its
                // 3-connectivity makes the sphere embedding unique, so the
                // extracted drawing is the only one for this crossing set.
                std::vector<Edge> pedges;
                std::uint64_t used = 0;
                for (auto [i, j] : search.chosen) used |= edge_bit(i) | edge_bit(j);
                for (int e = 0; e < m; ++e)
                    if (!(used >> e & 1)) pedges.push_back(g.edges()[e]);
                for (int idx = 0; idx < static_cast<int>(search.chosen.size()); ++idx) {
                    int c = n + idx;
                    for (int e : {search.chosen[idx].first, search.chosen[idx].second}) {
                        pedges.push_back(std::minmax(c, int(g.edges()[e].first)));
                        pedges.push_back(std::minmax(c, int(g.edges()[e].second)));
                    }
                }
                Graph planarization =
                    Graph::from_edge_list(n + static_cast<int>(search.chosen.size()), pedges);
                if (planarization.n() >= 4 &&
                    vertex_connectivity(planarization).kappa >= 3) {
                    std::string code = drawing_code(*d);
                    if (seen_codes.insert(code).second) {
                        out.codes.push_back(code);
                        out.representatives.push_back(std::move(*d));
                    }
                } else {
                    out.complete = false;
                    out.unresolved.push_back(search.chosen);
                }
            }
        }
        if (!search.chosen.empty() && !search.subtree_feasible(t)) return;
        for (int tt = t; tt < static_cast<int>(search.pairs.size()); ++tt) {
            auto [i, j] = search.pairs[tt];
            std::uint64_t bits = edge_bit(i) | edge_bit(j);
            if (search.used & bits) continue;
            search.chosen.push_back(search.pairs[tt]);
            search.used |= bits;
            self(self, tt + 1);
            search.used &= ~bits;
            search.chosen.pop_back();
        }
    };
    visit(visit, 0);
    return out;
}

CrossingSearchReference one_planar_reference(const Graph& g) {
    if (g.n() > 6) throw_scale("one_planar_reference handles at most 6 vertices");
    CrossingSearchReference ref;
    PairList pairs = candidate_pairs(g);
    PairList chosen;
    std::uint64_t used = 0;

    auto visit = [&](auto&& self, int t) -> void {
        if (attempt_realize(g, chosen)) {
            ++ref.realizable_sets;
            ref.one_planar = true;
            int size = static_cast<int>(chosen.size());
            if (ref.min_crossings < 0 || size < ref.min_crossings) ref.min_crossings = size;
        }
        for (int tt = t; tt < static_cast<int>(pairs.size()); ++tt) {
            auto [i, j] = pairs[tt];
            std::uint64_t bits = edge_bit(i) | edge_bit(j);
            if (used & bits) continue;
            chosen.push_back(pairs[tt]);
            used |= bits;
            self(self, tt + 1);
            used &= ~bits;
            chosen.pop_back();
        }
    };
    visit(visit, 0);
    return ref;
}

}  // namespace opg
