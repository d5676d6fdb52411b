#include "opg/planarity.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "opg/error.hpp"

namespace opg {

namespace {

using Dart = std::pair<int, int>;

// Face-growing planarity on one biconnected block.  The embedded subgraph
// starts as a cycle and grows by repeatedly routing a path of some
// unembedded fragment through a face that contains all of the fragment's
// attachment vertices.  If a fragment ever has no such face, the block is
// non-planar; picking a fragment with the fewest admissible faces first
// makes the greedy complete.
struct BlockEmbedder {
    const Graph& g;
    std::vector<std::vector<int>> rot;
    std::vector<std::vector<Dart>> faces;
    uint64_t embedded = 0;             // embedded vertices
    std::vector<char> edge_done;       // by edge index

    explicit BlockEmbedder(const Graph& graph)
        : g(graph), rot(graph.n()), edge_done(graph.m(), 0) {}

    struct Fragment {
        std::vector<int> attachments;  // embedded vertices, ascending
        uint64_t interior = 0;         // unembedded vertices, empty for a chord
        int chord = -1;                // edge index when the fragment is one edge
    };

    void mark_edge(int u, int v) {
        int idx = g.edge_index(u, v);
        check_internal(idx >= 0, "embedding a non-edge");
        edge_done[idx] = 1;
    }

    // A cycle from the first non-tree edge of a BFS tree: tree paths from
    // both endpoints up to their lowest common ancestor.
    std::vector<int> initial_cycle() const {
        std::vector<int> parent(g.n(), -2), depth(g.n(), 0);
        std::vector<int> queue{0};
        parent[0] = -1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : g.neighbors(v)) {
                if (parent[u] != -2) continue;
                parent[u] = v;
                depth[u] = depth[v] + 1;
                queue.push_back(u);
            }
        }
        for (auto [u, v] : g.edges()) {
            if (parent[u] == v || parent[v] == u) continue;
            std::vector<int> up_u{u}, up_v{v};
            int a = u, b = v;
            while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
            while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
            while (a != b) {
                up_u.push_back(a = parent[a]);
                up_v.push_back(b = parent[b]);
            }
            up_v.pop_back();  // drop the shared ancestor from one side
            up_u.insert(up_u.end(), up_v.rbegin(), up_v.rend());
            return up_u;
        }
        return {};
    }

    void embed_cycle(const std::vector<int>& cycle) {
        int k = static_cast<int>(cycle.size());
        std::vector<Dart> fwd, bwd;
        for (int i = 0; i < k; ++i) {
            int a = cycle[i], b = cycle[(i + 1) % k];
            rot[a] = {cycle[(i + k - 1) % k], b};
            fwd.push_back({a, b});
            bwd.push_back({cycle[(k - i) % k], cycle[(k - i - 1 + k) % k]});
            mark_edge(a, b);
            embedded |= uint64_t{1} << a;
        }
        faces.push_back(std::move(fwd));
        faces.push_back(std::move(bwd));
    }

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // Chords: unembedded edges with both endpoints embedded.
        for (int i = 0; i < g.m(); ++i) {
            if (edge_done[i]) continue;
            auto [u, v] = g.edges()[i];
            if (((embedded >> u) & 1) && ((embedded >> v) & 1)) {
                Fragment f;
                f.attachments = {u, v};
                f.chord = i;
                out.push_back(std::move(f));
            }
        }
        // Components of the unembedded vertices, with their attachments.
        uint64_t todo = g.vertex_mask() & ~embedded;
        while (todo) {
            int s = std::countr_zero(todo);
            uint64_t comp = uint64_t{1} << s;
            uint64_t frontier = comp;
            uint64_t attach = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                uint64_t nb = g.adj_mask(v);
                attach |= nb & embedded;
                uint64_t fresh = nb & ~embedded & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            Fragment f;
            f.interior = comp;
            for (uint64_t m = attach; m; m &= m - 1)
                f.attachments.push_back(std::countr_zero(m));
            out.push_back(std::move(f));
            todo &= ~comp;
        }
        return out;
    }

    // Path between two attachments whose interior lies in the fragment.
    std::vector<int> alpha_path(const Fragment& f) const {
        if (f.chord >= 0) return {f.attachments[0], f.attachments[1]};
        int a = f.attachments[0];
        uint64_t attach_rest = 0;
        for (size_t i = 1; i < f.attachments.size(); ++i)
            attach_rest |= uint64_t{1} << f.attachments[i];
        std::vector<int> prev(g.n(), -1);
        std::vector<int> queue;
        uint64_t seen = 0;
        for (uint64_t m = g.adj_mask(a) & f.interior; m; m &= m - 1) {
            int v = std::countr_zero(m);
            prev[v] = a;
            seen |= uint64_t{1} << v;
            queue.push_back(v);
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            uint64_t hit = g.adj_mask(v) & attach_rest;
            if (hit) {
                std::vector<int> path{std::countr_zero(hit)};
                for (int w = v; w != -1; w = (w == a ? -1 : prev[w])) path.push_back(w);
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (uint64_t m = g.adj_mask(v) & f.interior & ~seen; m; m &= m - 1) {
                int u = std::countr_zero(m);
                seen |= uint64_t{1} << u;
                prev[u] = v;
                queue.push_back(u);
            }
        }
        throw_internal("fragment has no path between attachments");
    }

    // Route `path` (attachment .. interior .. attachment) through face fi,
    // splitting it in two.
    void embed_path(int fi, const std::vector<int>& path) {
        int a = path.front(), b = path.back();
        std::vector<Dart> face = std::move(faces[fi]);
        int m = static_cast<int>(face.size());
        int ia = -1, ib = -1;
        for (int i = 0; i < m; ++i) {
            if (face[i].second == a) ia = i;
            if (face[i].second == b) ib = i;
        }
        check_internal(ia >= 0 && ib >= 0 && ia != ib, "face must contain both path ends");
        int x = face[ia].first;   // corner at a: (x -> a), (a -> next)
        int p = face[ib].first;   // corner at b: (p -> b), (b -> next)

        std::vector<Dart> forward, backward;
        for (size_t i = 0; i + 1 < path.size(); ++i) forward.push_back({path[i], path[i + 1]});
        for (size_t i = path.size(); i-- > 1;) backward.push_back({path[i], path[i - 1]});

        // New face A: the path, then the old boundary from b around to a.
        std::vector<Dart> face_a = forward;
        for (int i = (ib + 1) % m; ; i = (i + 1) % m) {
            face_a.push_back(face[i]);
            if (i == ia) break;
        }
        // New face B: the reversed path, then the old boundary from a to b.
        std::vector<Dart> face_b = backward;
        for (int i = (ia + 1) % m; ; i = (i + 1) % m) {
            face_b.push_back(face[i]);
            if (i == ib) break;
        }
        faces[fi] = std::move(face_a);
        faces.push_back(std::move(face_b));

        // Rotations: at a the first path vertex goes right after x; at b the
        // last path vertex goes right after p; interior vertices are fresh.
        auto insert_after = [&](int at, int anchor, int fresh) {
            auto& r = rot[at];
            auto it = std::find(r.begin(), r.end(), anchor);
            check_internal(it != r.end(), "rotation anchor missing");
            r.insert(it + 1, fresh);
        };
        insert_after(a, x, path[1]);
        insert_after(b, p, path[path.size() - 2]);
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            rot[path[i]] = {path[i - 1], path[i + 1]};
            embedded |= uint64_t{1} << path[i];
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
    }

    bool run() {
        std::vector<int> cycle = initial_cycle();
        check_internal(cycle.size() >= 3, "biconnected block must contain a cycle");
        embed_cycle(cycle);

        while (true) {
            if (std::all_of(edge_done.begin(), edge_done.end(), [](char c) { return c != 0; }))
                return true;
            std::vector<Fragment> frags = fragments();
            check_internal(!frags.empty(), "edges remain but no fragment found");

            // Face -> vertex set, for admissibility checks.
            std::vector<uint64_t> face_vertices;
            for (const auto& f : faces) {
                uint64_t mask = 0;
                for (const Dart& d : f) mask |= uint64_t{1} << d.first;
                face_vertices.push_back(mask);
            }

            int best = -1, best_count = -1, best_face = -1;
            for (size_t i = 0; i < frags.size(); ++i) {
                uint64_t want = 0;
                for (int v : frags[i].attachments) want |= uint64_t{1} << v;
                int count = 0, first_face = -1;
                for (size_t fi = 0; fi < faces.size(); ++fi) {
                    if ((face_vertices[fi] & want) == want) {
                        ++count;
                        if (first_face < 0) first_face = static_cast<int>(fi);
                    }
                }
                if (count == 0) return false;  // fragment cannot be placed
                if (best < 0 || count < best_count) {
                    best = static_cast<int>(i);
                    best_count = count;
                    best_face = first_face;
                    if (count == 1) break;
                }
            }
            check_internal(frags[best].attachments.size() >= 2,
                           "fragment of a biconnected block needs two attachments");
            embed_path(best_face, alpha_path(frags[best]));
        }
    }
};

// Biconnected components as edge lists, via the standard lowpoint DFS with
// an edge stack.  Emitted in a deterministic order.
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    int n = g.n();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    // Iterative DFS with explicit neighbour indices.
    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
    std::vector<size_t> next_index(n, 0);

    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<int> dfs{root};
        num[root] = low[root] = timer++;
        while (!dfs.empty()) {
            int v = dfs.back();
            if (next_index[v] < nbrs[v].size()) {
                int u = nbrs[v][next_index[v]++];
                if (num[u] < 0) {
                    stack.push_back({v, u});
                    parent[u] = v;
                    num[u] = low[u] = timer++;
                    dfs.push_back(u);
                } else if (u != parent[v] && num[u] < num[v]) {
                    stack.push_back({v, u});
                    low[v] = std::min(low[v], num[u]);
                }
            } else {
                dfs.pop_back();
                if (!dfs.empty()) {
                    int p = dfs.back();
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        // p is a cut vertex (or root): pop one block.
                        std::vector<Edge> block;
                        while (!stack.empty()) {
                            Edge e = stack.back();
                            stack.pop_back();
                            block.push_back(e);
                            if ((e.first == p && e.second == v) ||
                                (e.first == v && e.second == p))
                                break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

}  // namespace

PlanarEmbedding is_planar(const Graph& g) {
    PlanarEmbedding out;
    if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return out;  // over the planar bound

    out.rotation.assign(g.n(), {});
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() == 1) {
            auto [u, v] = block[0];
            int a = std::min(u, v), b = std::max(u, v);
            out.rotation[a].push_back(b);
            out.rotation[b].push_back(a);
            continue;
        }
        // Local graph on the block's vertices.
        std::vector<int> verts;
        for (auto [u, v] : block) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> to_local(g.n(), -1);
        for (size_t i = 0; i < verts.size(); ++i) to_local[verts[i]] = static_cast<int>(i);
        std::vector<Edge> local_edges;
        for (auto [u, v] : block) {
            int a = to_local[u], b = to_local[v];
            local_edges.push_back({std::min(a, b), std::max(a, b)});
        }
        Graph local = Graph::from_edge_list(static_cast<int>(verts.size()), std::move(local_edges));
        BlockEmbedder embedder(local);
        if (!embedder.run()) {
            out.rotation.clear();
            return out;
        }
        // Concatenating block rotations at a shared (cut) vertex keeps each
        // block's darts contiguous, which is exactly what a sphere embedding
        // of the union needs.
        for (size_t i = 0; i < verts.size(); ++i)
            for (int u : embedder.rot[i]) out.rotation[verts[i]].push_back(verts[u]);
    }
    out.planar = true;
    return out;
}

int count_rotation_faces(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    check_internal(static_cast<int>(rotation.size()) == g.n(),
                   "rotation size must match vertex count");
    // Position of u within rotation[v], for reverse-dart lookups.
    std::vector<std::vector<int>> pos(g.n(), std::vector<int>(g.n(), -1));
    for (int v = 0; v < g.n(); ++v) {
        check_internal(static_cast<int>(rotation[v].size()) == g.degree(v),
                       "rotation lists every neighbour exactly once");
        for (size_t i = 0; i < rotation[v].size(); ++i) {
            int u = rotation[v][i];
            check_internal(g.has_edge(v, u), "rotation entry must be a neighbour");
            check_internal(pos[v][u] < 0, "duplicate rotation entry");
            pos[v][u] = static_cast<int>(i);
        }
    }
    // Darts indexed per vertex by rotation position.
    int faces = 0;
    std::vector<std::vector<char>> seen(g.n());
    for (int v = 0; v < g.n(); ++v) seen[v].assign(rotation[v].size(), 0);
    for (int v = 0; v < g.n(); ++v) {
        for (size_t i = 0; i < rotation[v].size(); ++i) {
            if (seen[v][i]) continue;
            ++faces;
            int cv = v;
            size_t ci = i;
            while (!seen[cv][ci]) {
                seen[cv][ci] = 1;
                int cu = rotation[cv][ci];
                // next dart = rotation-successor of (cu -> cv)
                int back = pos[cu][cv];
                ci = (static_cast<size_t>(back) + 1) % rotation[cu].size();
                cv = cu;
            }
        }
    }
    return faces;
}

}  // namespace opg
