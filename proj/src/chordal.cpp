#include "opg/chordal.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace opg {

std::vector<int> mcs_order(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(n, 0), order;
    uint64_t visited = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if ((visited >> v) & 1) continue;
            if (pick < 0 || weight[v] > weight[pick]) pick = v;
        }
        order.push_back(pick);
        visited |= uint64_t{1} << pick;
        for (uint64_t m = g.adj_mask(pick) & ~visited; m; m &= m - 1)
            ++weight[std::countr_zero(m)];
    }
    return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] >= 0) return false;
        pos[v] = i;
    }
    // For each vertex, its neighbours eliminated later must form a clique.
    // It suffices to check them against the earliest such neighbour.
    for (int v = 0; v < n; ++v) {
        uint64_t later = 0;
        for (uint64_t m = g.adj_mask(v); m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (pos[u] > pos[v]) later |= uint64_t{1} << u;
        }
        if (std::popcount(later) <= 1) continue;
        int parent = -1;
        for (uint64_t m = later; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (parent < 0 || pos[u] < pos[parent]) parent = u;
        }
        uint64_t rest = later & ~(uint64_t{1} << parent);
        if ((g.adj_mask(parent) & rest) != rest) return false;
    }
    return true;
}

bool is_hole(const Graph& g, const std::vector<int>& cycle) {
    int len = static_cast<int>(cycle.size());
    if (len < 4) return false;
    uint64_t seen = 0;
    for (int v : cycle) {
        if (v < 0 || v >= g.n()) return false;
        if ((seen >> v) & 1) return false;
        seen |= uint64_t{1} << v;
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

namespace {

// Shortest x..y path whose interior avoids `forbidden`; empty if none.
std::vector<int> bfs_path_avoiding(const Graph& g, int x, int y, uint64_t forbidden) {
    uint64_t allowed = g.vertex_mask() & ~forbidden;
    allowed |= (uint64_t{1} << x) | (uint64_t{1} << y);
    std::vector<int> prev(g.n(), -1);
    std::vector<int> queue{x};
    uint64_t seen = uint64_t{1} << x;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        if (v == y) break;
        for (uint64_t m = g.adj_mask(v) & allowed & ~seen; m; m &= m - 1) {
            int u = std::countr_zero(m);
            seen |= uint64_t{1} << u;
            prev[u] = v;
            queue.push_back(u);
        }
    }
    if (!((seen >> y) & 1)) return {};
    std::vector<int> path;
    for (int v = y; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Build a hole through u and its non-adjacent neighbours x, y: a shortest
// x..y path avoiding N[u]\{x,y} is induced, and u sees none of its interior,
// so u + path is an induced cycle of length >= 4.
std::vector<int> hole_via(const Graph& g, int u, int x, int y) {
    uint64_t forbidden = g.adj_mask(u) | (uint64_t{1} << u);
    forbidden &= ~((uint64_t{1} << x) | (uint64_t{1} << y));
    std::vector<int> path = bfs_path_avoiding(g, x, y, forbidden);
    if (path.empty()) return {};
    std::vector<int> cycle{u};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

}  // namespace

ChordalResult is_chordal(const Graph& g) {
    ChordalResult res;
    std::vector<int> visit = mcs_order(g);
    std::vector<int> order(visit.rbegin(), visit.rend());
    if (is_perfect_elimination_order(g, order)) {
        res.chordal = true;
        res.peo = std::move(order);
        return res;
    }

    // Locate a witness: some vertex with two non-adjacent later neighbours
    // in the failed order, then trace a hole around it.  The order-derived
    // witness always yields one; the full triple scan is a safety net that
    // also covers degenerate inputs.
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n && res.hole.empty(); ++i) {
        int u = order[i];
        std::vector<int> later;
        for (int w : g.neighbors(u))
            if (pos[w] > i) later.push_back(w);
        for (size_t a = 0; a < later.size() && res.hole.empty(); ++a)
            for (size_t b = a + 1; b < later.size() && res.hole.empty(); ++b)
                if (!g.has_edge(later[a], later[b]))
                    res.hole = hole_via(g, u, later[a], later[b]);
    }
    for (int u = 0; u < n && res.hole.empty(); ++u) {
        std::vector<int> nb = g.neighbors(u);
        for (size_t a = 0; a < nb.size() && res.hole.empty(); ++a)
            for (size_t b = a + 1; b < nb.size() && res.hole.empty(); ++b)
                if (!g.has_edge(nb[a], nb[b])) res.hole = hole_via(g, u, nb[a], nb[b]);
    }
    check_internal(is_hole(g, res.hole), "non-chordal graph must yield a verifiable hole");
    res.chordal = false;
    return res;
}

bool is_simplicial(const Graph& g, int v) { return g.is_clique_mask(g.adj_mask(v)); }

std::vector<int> simplicial_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (is_simplicial(g, v)) out.push_back(v);
    return out;
}

KTreeResult is_k_tree(const Graph& g, int k) {
    KTreeResult res;
    if (k < 1 || g.n() < k) return res;

    uint64_t alive = g.vertex_mask();
    int alive_count = g.n();
    while (alive_count > k) {
        int pick = -1;
        for (uint64_t m = alive; m; m &= m - 1) {
            int v = std::countr_zero(m);
            uint64_t nb = g.adj_mask(v) & alive;
            if (std::popcount(nb) != k) continue;
            if (g.is_clique_mask(nb)) { pick = v; break; }
        }
        if (pick < 0) return res;
        res.peel_order.push_back(pick);
        alive &= ~(uint64_t{1} << pick);
        --alive_count;
    }
    if (!g.is_clique_mask(alive)) return res;
    for (uint64_t m = alive; m; m &= m - 1) res.base_clique.push_back(std::countr_zero(m));
    res.is_k_tree = true;
    return res;
}

std::vector<uint64_t> minimal_separators(const Graph& g) {
    int n = g.n();
    if (n > 14) throw_scale("minimal_separators: exhaustive search is guarded to 14 vertices");
    std::vector<uint64_t> seps;
    uint64_t full = g.vertex_mask();
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
        uint64_t rest = full & ~s;
        if (std::popcount(rest) < 2) continue;
        InducedSubgraph sub = induced_subgraph(g, rest);
        int close = 0;
        for (uint64_t comp : components(sub.graph)) {
            uint64_t nb = 0;
            for (uint64_t m = comp; m; m &= m - 1)
                nb |= g.adj_mask(sub.to_original[std::countr_zero(m)]);
            if ((nb & s) == s) ++close;
        }
        if (close >= 2) seps.push_back(s);
    }
    return seps;
}

std::vector<Graph> all_k_trees(int k, int n) {
    if (k < 1) throw_usage("all_k_trees: k must be positive");
    if (n < k) throw_usage("all_k_trees: n must be at least k");
    if (n > 10) throw_scale("all_k_trees: exhaustive construction is limited to n <= 10");
    std::vector<Graph> level = {Graph::complete(k)};
    for (int order = k; order < n; ++order) {
        std::set<std::vector<uint64_t>> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            // Enumerate the k-subsets of 0..order-1 that induce cliques.
            std::vector<int> pick(k);
            for (int i = 0; i < k; ++i) pick[i] = i;
            while (true) {
                uint64_t mask = vertex_list_mask(pick);
                if (g.is_clique_mask(mask)) {
                    Graph extended = g.add_vertex(pick);
                    auto code = canonical_form(extended).code;
                    if (seen.insert(code).second) next.push_back(extended);
                }
                int pos = k - 1;
                while (pos >= 0 && pick[pos] == order - k + pos) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
            }
        }
        level = std::move(next);
    }
    return level;
}

SeparatorCliqueResult minimal_separators_are_cliques(const Graph& g) {
    SeparatorCliqueResult res;
    for (uint64_t s : minimal_separators(g)) {
        if (g.is_clique_mask(s)) continue;
        res.all_cliques = false;
        for (uint64_t m = s; m; m &= m - 1) res.counterexample.push_back(std::countr_zero(m));
        break;
    }
    return res;
}

}  // namespace opg
