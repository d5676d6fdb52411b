#include "opg/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

#include "opg/error.hpp"

namespace opg {

Rational Rational::of(long long n, long long d) {
    check_internal(d > 0, "rational denominator must be positive");
    long long g = std::gcd(n, d);
    if (g == 0) g = 1;
    return Rational{n / g, d / g};
}

bool Rational::operator<(const Rational& o) const {
    // Denominators stay small (<= vertex count), so cross-multiplication in
    // long long is safe.
    return num * o.den < o.num * den;
}

int component_count_after_removal(const Graph& g, uint64_t cut_mask) {
    uint64_t alive = g.vertex_mask() & ~cut_mask;
    int count = 0;
    uint64_t seen = 0;
    for (int v = 0; v < g.n(); ++v) {
        uint64_t bit = 1ULL << v;
        if (!(alive & bit) || (seen & bit)) continue;
        ++count;
        uint64_t frontier = bit;
        uint64_t comp = bit;
        while (frontier != 0) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            uint64_t nbrs = g.adj_mask(u) & alive & ~comp;
            comp |= nbrs;
            frontier |= nbrs;
        }
        seen |= comp;
    }
    return count;
}

namespace {

// Unit-capacity max-flow on the vertex-split digraph: vertex v becomes
// v_in = 2v, v_out = 2v + 1 joined by a capacity-1 arc, and each edge uv
// becomes u_out -> v_in and v_out -> u_in of effectively unbounded capacity.
// The value of a max flow from s_out to t_in is the maximum number of
// internally vertex-disjoint s-t paths (s, t non-adjacent).
struct SplitFlow {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;                 // arcs[i ^ 1] is the reverse arc
    std::vector<std::vector<int>> out;     // node -> arc indices

    explicit SplitFlow(const Graph& g) : out(2 * g.n()) {
        for (int v = 0; v < g.n(); ++v) add(2 * v, 2 * v + 1, 1);
        for (const auto& [u, v] : g.edges()) {
            add(2 * u + 1, 2 * v, g.n());
            add(2 * v + 1, 2 * u, g.n());
        }
    }

    void add(int a, int b, int cap) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    }

    void reset(const Graph& g) {
        // Capacities are restored from structure: even index = forward arc.
        for (size_t i = 0; i < arcs.size(); i += 2) {
            int orig = (i < static_cast<size_t>(2 * g.n())) ? 1 : g.n();
            arcs[i].cap = orig;
            arcs[i + 1].cap = 0;
        }
    }

    // One BFS augmentation; returns false when t is unreachable.
    bool augment(int s, int t, std::vector<int>& via) {
        std::fill(via.begin(), via.end(), -1);
        via[s] = -2;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && via[t] == -1) {
            int a = q.front();
            q.pop();
            for (int idx : out[a]) {
                const Arc& arc = arcs[idx];
                if (arc.cap > 0 && via[arc.to] == -1) {
                    via[arc.to] = idx;
                    q.push(arc.to);
                }
            }
        }
        if (via[t] == -1) return false;
        for (int node = t; node != s;) {
            int idx = via[node];
            arcs[idx].cap -= 1;
            arcs[idx ^ 1].cap += 1;
            node = arcs[idx ^ 1].to;
        }
        return true;
    }

    // Max flow from s_out to t_in; `separator` receives the vertices whose
    // split arc crosses the minimum residual cut.
    int max_flow(int s, int t, std::vector<int>& via, uint64_t& separator) {
        int value = 0;
        while (augment(2 * s + 1, 2 * t, via)) ++value;
        // Nodes reachable from s_out in the residual network.
        std::vector<char> reach(out.size(), 0);
        std::queue<int> q;
        reach[2 * s + 1] = 1;
        q.push(2 * s + 1);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int idx : out[a]) {
                const Arc& arc = arcs[idx];
                if (arc.cap > 0 && !reach[arc.to]) {
                    reach[arc.to] = 1;
                    q.push(arc.to);
                }
            }
        }
        // A saturated split arc with v_in reachable and v_out not lies on
        // the cut; those vertices form a minimum separator.
        separator = 0;
        for (size_t v = 0; 2 * v + 1 < reach.size(); ++v) {
            if (reach[2 * v] && !reach[2 * v + 1]) separator |= 1ULL << v;
        }
        return value;
    }
};

std::vector<int> mask_to_vertices(uint64_t mask) {
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

ConnectivityResult vertex_connectivity(const Graph& g) {
    ConnectivityResult res;
    if (g.n() == 0) throw_violation("connectivity of the empty graph is undefined");
    if (g.m() == g.n() * (g.n() - 1) / 2) {
        res.kappa = g.n() - 1;
        res.complete = true;
        return res;
    }
    if (!is_connected(g)) {
        res.kappa = 0;
        return res;
    }
    SplitFlow flow(g);
    std::vector<int> via(2 * g.n());
    int best = g.n();
    uint64_t best_sep = 0;
    for (int s = 0; s < g.n(); ++s) {
        for (int t = s + 1; t < g.n(); ++t) {
            if (g.has_edge(s, t)) continue;
            flow.reset(g);
            uint64_t sep = 0;
            int value = flow.max_flow(s, t, via, sep);
            if (value < best) {
                best = value;
                best_sep = sep;
            }
        }
    }
    check_internal(best < g.n(), "non-complete graph must have a separating set");
    res.kappa = best;
    res.separator = mask_to_vertices(best_sep);
    check_internal(static_cast<int>(res.separator.size()) == best,
                   "separator size must equal the flow value");
    check_internal(component_count_after_removal(g, best_sep) >= 2,
                   "separator witness must disconnect the graph");
    return res;
}

int vertex_connectivity_bruteforce(const Graph& g) {
    if (g.n() == 0) throw_violation("connectivity of the empty graph is undefined");
    if (g.n() > 20) throw_scale("brute-force connectivity is limited to 20 vertices");
    if (g.m() == g.n() * (g.n() - 1) / 2) return g.n() - 1;
    if (!is_connected(g)) return 0;
    for (int size = 1; size < g.n() - 1; ++size) {
        // All subsets of the given size, in mask order.
        for (uint64_t mask = 0; mask < (1ULL << g.n()); ++mask) {
            if (std::popcount(mask) != size) continue;
            if (component_count_after_removal(g, mask) >= 2) return size;
        }
    }
    return g.n() - 1;
}

ToughnessResult toughness(const Graph& g, int max_n) {
    if (g.n() == 0) throw_violation("toughness of the empty graph is undefined");
    if (g.n() > max_n) throw_scale("toughness enumeration is limited to " +
                                   std::to_string(max_n) + " vertices");
    ToughnessResult res;
    bool found = false;
    Rational best;
    uint64_t best_mask = 0;
    uint64_t full = g.vertex_mask();
    for (uint64_t mask = 1; mask < full; ++mask) {
        int c = component_count_after_removal(g, mask);
        if (c < 2) continue;
        Rational value = Rational::of(std::popcount(mask), c);
        bool better = false;
        if (!found || value < best) {
            better = true;
        } else if (!(best < value)) {
            // Equal value: prefer fewer vertices, then the lexicographically
            // smaller vertex list.
            int pm = std::popcount(mask), pb = std::popcount(best_mask);
            if (pm != pb) {
                better = pm < pb;
            } else {
                better = mask_to_vertices(mask) < mask_to_vertices(best_mask);
            }
        }
        if (better) {
            found = true;
            best = value;
            best_mask = mask;
        }
    }
    if (!found) {
        // No vertex set disconnects the graph: complete graph.
        res.infinite = true;
        return res;
    }
    res.value = best;
    res.cut = mask_to_vertices(best_mask);
    return res;
}

bool check_chvatal_bound(const Graph& g, int max_n) {
    ToughnessResult t = toughness(g, max_n);
    if (t.infinite) return true;
    int kappa = vertex_connectivity(g).kappa;
    // ceil(2 * num / den) without leaving integers.
    long long ceil2t = (2 * t.value.num + t.value.den - 1) / t.value.den;
    return kappa >= ceil2t;
}

}  // namespace opg
