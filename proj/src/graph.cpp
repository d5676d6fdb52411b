#include "opg/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace opg {

Graph Graph::from_edge_list(int n, std::vector<Edge> edges) {
    if (n < 0 || n > 64) throw_usage("vertex count must be between 0 and 64");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw_usage("edge endpoint out of range");
        if (u == v) throw_usage("loops are not allowed");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw_usage("duplicate edge in edge list");

    Graph g;
    g.n_ = n;
    g.adj_.assign(n, 0);
    g.edges_ = std::move(edges);
    for (auto [u, v] : g.edges_) {
        g.adj_[u] |= uint64_t{1} << v;
        g.adj_[v] |= uint64_t{1} << u;
    }
    return g;
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return from_edge_list(n, std::move(edges));
}

Graph Graph::join_complete_empty(int k, int r) {
    if (k < 0 || r < 0) throw_usage("join_complete_empty: negative size");
    std::vector<Edge> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
    for (int u = 0; u < k; ++u)
        for (int w = 0; w < r; ++w) edges.push_back({u, k + w});
    return from_edge_list(k + r, std::move(edges));
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree(v));
    for (uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_clique_mask(uint64_t mask) const {
    for (uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        uint64_t rest = mask & ~(uint64_t{1} << v);
        if ((adj_[v] & rest) != rest) return false;
    }
    return true;
}

Graph Graph::add_vertex(const std::vector<int>& nbrs) const {
    std::vector<Edge> edges = edges_;
    for (int u : nbrs) {
        if (u < 0 || u >= n_) throw_usage("add_vertex: neighbour out of range");
        edges.push_back({u, n_});
    }
    return from_edge_list(n_ + 1, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, uint64_t keep_mask) {
    keep_mask &= g.vertex_mask();
    InducedSubgraph out;
    out.to_sub.assign(g.n(), -1);
    for (uint64_t m = keep_mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        out.to_sub[v] = static_cast<int>(out.to_original.size());
        out.to_original.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (out.to_sub[u] >= 0 && out.to_sub[v] >= 0)
            edges.push_back({out.to_sub[u], out.to_sub[v]});
    out.graph = Graph::from_edge_list(static_cast<int>(out.to_original.size()), std::move(edges));
    return out;
}

std::vector<uint64_t> components(const Graph& g) {
    std::vector<uint64_t> comps;
    uint64_t seen = 0;
    for (int s = 0; s < g.n(); ++s) {
        if ((seen >> s) & 1) continue;
        uint64_t comp = uint64_t{1} << s;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t m = frontier; m; m &= m - 1)
                next |= g.adj_mask(std::countr_zero(m));
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return components(g).size() == 1;
}

namespace {

// One round of colour refinement: new colour = (old colour, multiset of
// neighbour colours), compressed to dense ids.  Stable after at most n rounds.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    std::vector<int> chosen;
    std::vector<uint64_t> rows;
    uint64_t used = 0;
    std::vector<uint64_t> best;
    std::vector<int> best_perm;
    bool have_best = false;
    long generation = 0;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()), color(refine_colors(graph)) {}

    // Swapping u and w is an automorphism iff their adjacencies agree away
    // from {u,w}; such candidates generate identical subtrees.
    bool interchangeable(int u, int w) const {
        uint64_t ignore = (uint64_t{1} << u) | (uint64_t{1} << w);
        return (g.adj_mask(u) & ~ignore) == (g.adj_mask(w) & ~ignore);
    }

    // cmp: -1 current prefix already beats best, 0 still equal.
    void run(int pos, int cmp) {
        if (pos == n) {
            if (!have_best || cmp < 0) {
                best = rows;
                best_perm = chosen;
                have_best = true;
                ++generation;
            }
            return;
        }
        std::vector<int> cands;
        for (int v = 0; v < n; ++v)
            if (!((used >> v) & 1)) cands.push_back(v);
        std::stable_sort(cands.begin(), cands.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        std::vector<int> tried;
        for (int v : cands) {
            bool dup = false;
            for (int w : tried)
                if (color[w] == color[v] && interchangeable(w, v)) { dup = true; break; }
            if (dup) continue;
            tried.push_back(v);

            uint64_t row = 0;
            for (int j = 0; j < pos; ++j)
                if (g.has_edge(v, chosen[j])) row |= uint64_t{1} << j;
            int ncmp = cmp;
            if (ncmp == 0 && have_best) {
                if (row > best[pos]) continue;
                if (row < best[pos]) ncmp = -1;
            }
            chosen.push_back(v);
            rows.push_back(row);
            used |= uint64_t{1} << v;
            long gen_before = generation;
            run(pos + 1, ncmp);
            used &= ~(uint64_t{1} << v);
            rows.pop_back();
            chosen.pop_back();
            // Once a descendant replaces best, the new best shares this
            // node's prefix, so later candidates compare as equals again.
            if (generation != gen_before && cmp == -1) cmp = 0;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch search(g);
    search.run(0, 0);
    CanonicalForm out;
    out.code = std::move(search.best);
    out.perm = std::move(search.best_perm);
    return out;
}

std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() > 16 || b.n() > 16)
        throw_scale("are_isomorphic: exact search is guarded to 16 vertices");
    if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;

    auto degs = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return std::nullopt;

    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    if (ca.code != cb.code) return std::nullopt;

    std::vector<int> map(a.n());
    for (int i = 0; i < a.n(); ++i) map[ca.perm[i]] = cb.perm[i];
    for (auto [u, v] : a.edges())
        check_internal(b.has_edge(map[u], map[v]), "isomorphism witness does not preserve edges");
    return map;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw_usage("edge list: expected header line \"n m\"");
    if (m < 0) throw_usage("edge list: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw_usage("edge list: fewer edges than the header announces");
        edges.push_back({u, v});
    }
    int extra;
    if (in >> extra) throw_usage("edge list: trailing data after the announced edges");
    return Graph::from_edge_list(n, std::move(edges));
}

std::string format_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace opg
