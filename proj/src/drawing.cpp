#include "opg/drawing.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "opg/error.hpp"

namespace opg {

namespace {

// Union-find over planarization nodes, used for component checks.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

int rotation_position(const std::vector<int>& rot, int arc_index) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == arc_index) return i;
    return -1;
}

}  // namespace

int Drawing::crossing_of_edge(int e) const {
    for (int j = 0; j < static_cast<int>(crossings.size()); ++j)
        if (crossings[j].first == e || crossings[j].second == e) return j;
    return -1;
}

int Drawing::arc_at(int vertex, int e) const {
    check_internal(vertex < graph.n(), "arc_at expects a vertex node");
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        if (arcs[i].edge == e && (arcs[i].a == vertex || arcs[i].b == vertex)) return i;
    return -1;
}

int Drawing::arc_of_segment(int e, int seg) const {
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        if (arcs[i].edge == e && arcs[i].seg == seg) return i;
    return -1;
}

int Drawing::arc_other_end(int arc_index, int node) const {
    const Arc& t = arcs[arc_index];
    check_internal(t.a == node || t.b == node, "arc_other_end: node not on arc");
    return t.a == node ? t.b : t.a;
}

std::vector<Arc> build_arcs(const Graph& g,
                            const std::vector<std::pair<int, int>>& crossings) {
    std::vector<int> crossing_of(g.m(), -1);
    for (int j = 0; j < static_cast<int>(crossings.size()); ++j) {
        crossing_of[crossings[j].first] = j;
        crossing_of[crossings[j].second] = j;
    }
    std::vector<Arc> arcs;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        if (crossing_of[e] < 0) {
            arcs.push_back({u, v, e, 0});
        } else {
            int x = g.n() + crossing_of[e];
            arcs.push_back({u, x, e, 0});
            arcs.push_back({x, v, e, 1});
        }
    }
    return arcs;
}

Drawing plane_drawing(const Graph& g,
                      const std::vector<std::vector<int>>& neighbour_rotation) {
    check_internal(static_cast<int>(neighbour_rotation.size()) == g.n(),
                   "plane_drawing: rotation size mismatch");
    Drawing d;
    d.graph = g;
    d.arcs = build_arcs(g, {});
    d.rotation.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        for (int w : neighbour_rotation[v]) {
            int e = g.edge_index(v, w);
            check_internal(e >= 0, "plane_drawing: rotation lists a non-edge");
            d.rotation[v].push_back(e);  // arc index == edge index when nothing crosses
        }
    }
    require_valid(d);
    return d;
}

std::optional<Violation> validate(const Drawing& d) {
    const Graph& g = d.graph;
    const int c = static_cast<int>(d.crossings.size());

    std::vector<int> times_crossed(g.m(), 0);
    for (int j = 0; j < c; ++j) {
        auto [e1, e2] = d.crossings[j];
        if (e1 < 0 || e1 >= g.m() || e2 < 0 || e2 >= g.m())
            return Violation{"crossing-out-of-range",
                             "crossing pair " + std::to_string(j) + " references a bad edge index"};
        if (e1 >= e2)
            return Violation{"crossings-not-canonical",
                             "crossing pair " + std::to_string(j) + " is not sorted"};
        if (j > 0 && !(d.crossings[j - 1] < d.crossings[j]))
            return Violation{"crossings-not-canonical", "crossing list is not sorted"};
        ++times_crossed[e1];
        ++times_crossed[e2];
        auto [a1, b1] = g.edges()[e1];
        auto [a2, b2] = g.edges()[e2];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
            return Violation{"adjacent-edges-cross",
                             "edges " + std::to_string(e1) + " and " + std::to_string(e2) +
                                 " share an endpoint"};
    }
    for (int e = 0; e < g.m(); ++e)
        if (times_crossed[e] > 1)
            return Violation{"edge-crossed-twice", "edge " + std::to_string(e)};

    if (d.arcs != build_arcs(g, d.crossings))
        return Violation{"arc-set-mismatch", "arcs are not the canonical list for (graph, crossings)"};

    const int nodes = d.node_count();
    if (static_cast<int>(d.rotation.size()) != nodes)
        return Violation{"rotation-size", "expected one cyclic order per node"};
    std::vector<std::vector<int>> incident(nodes);
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
        incident[d.arcs[i].a].push_back(i);
        incident[d.arcs[i].b].push_back(i);
    }
    for (int y = 0; y < nodes; ++y) {
        std::vector<int> got = d.rotation[y], want = incident[y];
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want)
            return Violation{"rotation-not-permutation",
                             "node " + std::to_string(y) +
                                 " does not list each incident arc exactly once"};
    }
    for (int j = 0; j < c; ++j) {
        const std::vector<int>& rot = d.rotation[g.n() + j];
        check_internal(rot.size() == 4, "crossing node degree");
        if (d.arcs[rot[0]].edge != d.arcs[rot[2]].edge ||
            d.arcs[rot[1]].edge != d.arcs[rot[3]].edge ||
            d.arcs[rot[0]].edge == d.arcs[rot[1]].edge)
            return Violation{"crossing-alternation",
                             "crossing node " + std::to_string(g.n() + j) +
                                 " does not alternate between its two edges"};
    }

    // Sphericity: every planarization component must satisfy V - E + F = 2.
    UnionFind uf(nodes);
    for (const Arc& t : d.arcs) uf.unite(t.a, t.b);
    std::map<int, std::array<long, 3>> tally;  // root -> {V, E, F}
    for (int y = 0; y < nodes; ++y) tally[uf.find(y)][0]++;
    for (const Arc& t : d.arcs) tally[uf.find(t.a)][1]++;
    const int dart_count = 2 * static_cast<int>(d.arcs.size());
    std::vector<char> seen(dart_count, 0);
    for (int start = 0; start < dart_count; ++start) {
        if (seen[start]) continue;
        int dart = start;
        do {
            seen[dart] = 1;
            int h = dart_head(d, dart);
            int pos = rotation_position(d.rotation[h], dart / 2);
            check_internal(pos >= 0, "validate: arc missing from rotation");
            int next_arc = d.rotation[h][(pos + 1) % d.rotation[h].size()];
            dart = 2 * next_arc + (d.arcs[next_arc].a == h ? 0 : 1);
        } while (dart != start);
        tally[uf.find(dart_head(d, start))][2]++;
    }
    for (const auto& entry : tally) {
        const std::array<long, 3>& vef = entry.second;
        if (vef[1] == 0) continue;  // isolated vertex, nothing to check
        if (vef[0] - vef[1] + vef[2] != 2)
            return Violation{"not-spherical",
                             "a planarization component has V-E+F = " +
                                 std::to_string(vef[0] - vef[1] + vef[2])};
    }
    return std::nullopt;
}

void require_valid(const Drawing& d) {
    if (auto v = validate(d))
        throw_violation("invalid drawing [" + v->code + "]: " + v->detail);
}

int dart_tail(const Drawing& d, int dart) {
    const Arc& t = d.arcs[dart / 2];
    return dart % 2 == 0 ? t.a : t.b;
}

int dart_head(const Drawing& d, int dart) {
    const Arc& t = d.arcs[dart / 2];
    return dart % 2 == 0 ? t.b : t.a;
}

std::vector<Face> faces(const Drawing& d) {
    const int dart_count = 2 * static_cast<int>(d.arcs.size());
    std::vector<Face> result;
    std::vector<char> seen(dart_count, 0);
    for (int start = 0; start < dart_count; ++start) {
        if (seen[start]) continue;
        Face f;
        int dart = start;
        do {
            seen[dart] = 1;
            f.darts.push_back(dart);
            if (d.is_crossing_node(dart_tail(d, dart))) f.crossed = true;
            int h = dart_head(d, dart);
            int pos = rotation_position(d.rotation[h], dart / 2);
            check_internal(pos >= 0, "faces: arc missing from rotation");
            int next_arc = d.rotation[h][(pos + 1) % d.rotation[h].size()];
            dart = 2 * next_arc + (d.arcs[next_arc].a == h ? 0 : 1);
        } while (dart != start);
        result.push_back(std::move(f));
    }
    return result;
}

std::vector<int> face_nodes(const Drawing& d, const Face& f) {
    std::vector<int> nodes;
    nodes.reserve(f.darts.size());
    for (int dart : f.darts) nodes.push_back(dart_tail(d, dart));
    return nodes;
}

Graph planar_skeleton(const Drawing& d) {
    std::vector<Edge> kept;
    for (int e = 0; e < d.graph.m(); ++e)
        if (!d.edge_is_crossed(e)) kept.push_back(d.graph.edges()[e]);
    return Graph::from_edge_list(d.graph.n(), kept);
}

namespace {

// Darts of `f` whose arcs are whole uncrossed edges, keyed by edge index.
std::vector<std::pair<int, int>> boundary_edge_darts(const Drawing& d, const Face& f) {
    std::vector<std::pair<int, int>> result;
    for (int dart : f.darts) {
        const Arc& t = d.arcs[dart / 2];
        if (!d.edge_is_crossed(t.edge)) result.push_back({t.edge, dart});
    }
    return result;
}

bool face_is_uncrossed_triangle(const Face& f) {
    return !f.crossed && f.darts.size() == 3;
}

}  // namespace

std::vector<TwinPair> twin_faces(const Drawing& d) {
    std::vector<Face> fs = faces(d);
    std::vector<TwinPair> result;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        if (!face_is_uncrossed_triangle(fs[i])) continue;
        for (int j = 0; j < static_cast<int>(fs.size()); ++j) {
            if (j == i || !face_is_uncrossed_triangle(fs[j])) continue;
            std::vector<int> ei, ej;
            for (auto [e, dart] : boundary_edge_darts(d, fs[i])) ei.push_back(e);
            for (auto [e, dart] : boundary_edge_darts(d, fs[j])) ej.push_back(e);
            std::sort(ei.begin(), ei.end());
            std::sort(ej.begin(), ej.end());
            std::vector<int> shared;
            std::set_intersection(ei.begin(), ei.end(), ej.begin(), ej.end(),
                                  std::back_inserter(shared));
            if (shared.size() != 1) continue;
            int e = shared[0];
            auto [a, b] = d.graph.edges()[e];
            auto third = [&](const Face& f) {
                for (int node : face_nodes(d, f))
                    if (node != a && node != b) return node;
                return -1;
            };
            int v1 = third(fs[i]), v2 = third(fs[j]);
            if (v1 < 0 || v2 < 0 || v1 == v2) continue;
            uint64_t quad = (1ULL << a) | (1ULL << b) | (1ULL << v1) | (1ULL << v2);
            if (!d.graph.is_clique_mask(quad)) continue;
            // Orient (a, b) so that f1's walk runs b -> a.
            int ab_dart = -1;
            for (auto [fe, dart] : boundary_edge_darts(d, fs[i]))
                if (fe == e) ab_dart = dart;
            check_internal(ab_dart >= 0, "twin_faces: shared edge not on boundary");
            int tail = dart_tail(d, ab_dart), head = dart_head(d, ab_dart);
            result.push_back({i, j, head, tail, v1, v2});
        }
    }
    return result;
}

namespace {

// Maps a node of `from` to the corresponding node of `to` when the vertex
// sets agree and crossings were re-indexed: vertices are fixed, crossing j
// goes to the crossing of the re-mapped edge pair.
struct RebuildContext {
    const Drawing& from;
    Drawing& to;
    std::vector<int> edge_map;  // old edge index -> new edge index

    int map_node(int node) const {
        if (node < from.graph.n()) return node;
        auto [e1, e2] = from.crossings[node - from.graph.n()];
        int f1 = edge_map[e1], f2 = edge_map[e2];
        std::pair<int, int> key = std::minmax(f1, f2);
        for (int j = 0; j < static_cast<int>(to.crossings.size()); ++j)
            if (to.crossings[j] == key) return to.graph.n() + j;
        check_internal(false, "map_node: crossing pair vanished");
        return -1;
    }
};

}  // namespace

Drawing four_join(const Drawing& d, int f1, int f2) {
    std::optional<TwinPair> pair;
    for (const TwinPair& tp : twin_faces(d))
        if (tp.f1 == f1 && tp.f2 == f2) pair = tp;
    if (!pair)
        throw_violation("four_join: (" + std::to_string(f1) + ", " + std::to_string(f2) +
                        ") is not an ordered twin-face pair");
    const int a = pair->a, b = pair->b, v1 = pair->v1, v2 = pair->v2;
    const int x = d.graph.n();

    std::vector<int> nbrs = {a, b, v1, v2};
    std::sort(nbrs.begin(), nbrs.end());
    Drawing out;
    out.graph = d.graph.add_vertex(nbrs);

    std::vector<int> edge_map(d.graph.m());
    for (int e = 0; e < d.graph.m(); ++e) {
        auto [p, q] = d.graph.edges()[e];
        edge_map[e] = out.graph.edge_index(p, q);
        check_internal(edge_map[e] >= 0, "four_join: old edge lost");
    }
    const int e_ab = edge_map[d.graph.edge_index(a, b)];
    const int e_xa = out.graph.edge_index(a, x);
    const int e_xb = out.graph.edge_index(b, x);
    const int e_xv1 = out.graph.edge_index(v1, x);
    const int e_xv2 = out.graph.edge_index(v2, x);

    for (auto [e1, e2] : d.crossings)
        out.crossings.push_back(std::minmax(edge_map[e1], edge_map[e2]));
    out.crossings.push_back(std::minmax(e_ab, e_xv2));
    std::sort(out.crossings.begin(), out.crossings.end());
    out.arcs = build_arcs(out.graph, out.crossings);

    RebuildContext ctx{d, out, edge_map};
    const int old_eab = d.graph.edge_index(a, b);

    out.rotation.assign(out.node_count(), {});
    for (int node = 0; node < d.node_count(); ++node) {
        int target = ctx.map_node(node);
        for (int arc : d.rotation[node]) {
            const Arc& t = d.arcs[arc];
            int e_new = edge_map[t.edge];
            int mapped;
            if (t.edge == old_eab) {
                // The split edge: take the segment incident to this endpoint.
                check_internal(node == a || node == b, "four_join: ab arc at foreign node");
                int seg = (node == std::min(a, b)) ? 0 : 1;
                mapped = out.arc_of_segment(e_ab, seg);
            } else {
                int seg = t.seg;
                mapped = out.arc_of_segment(e_new, seg);
            }
            check_internal(mapped >= 0, "four_join: arc mapping failed");
            out.rotation[target].push_back(mapped);
        }
    }

    // New-node ids.
    const int cross_index = [&] {
        std::pair<int, int> key = std::minmax(e_ab, e_xv2);
        for (int j = 0; j < static_cast<int>(out.crossings.size()); ++j)
            if (out.crossings[j] == key) return j;
        check_internal(false, "four_join: new crossing missing");
        return -1;
    }();
    const int cnode = out.graph.n() + cross_index;

    auto seg_of_at = [&](int e, int endpoint) {
        // Arc of crossed edge e incident to planarization node `endpoint`.
        for (int i = 0; i < static_cast<int>(out.arcs.size()); ++i)
            if (out.arcs[i].edge == e && (out.arcs[i].a == endpoint || out.arcs[i].b == endpoint))
                return i;
        check_internal(false, "four_join: segment lookup failed");
        return -1;
    };

    const int ab_at_a = seg_of_at(e_ab, a);
    const int ab_at_b = seg_of_at(e_ab, b);
    const int xv2_at_v2 = seg_of_at(e_xv2, v2);
    const int xv2_at_x = seg_of_at(e_xv2, x);
    const int arc_xa = out.arc_of_segment(e_xa, 0);
    const int arc_xb = out.arc_of_segment(e_xb, 0);
    const int arc_xv1 = out.arc_of_segment(e_xv1, 0);

    auto insert_after = [&](int node, int anchor_arc, int new_arc) {
        std::vector<int>& rot = out.rotation[node];
        int pos = rotation_position(rot, anchor_arc);
        check_internal(pos >= 0, "four_join: anchor arc missing");
        rot.insert(rot.begin() + pos + 1, new_arc);
    };
    auto insert_before = [&](int node, int anchor_arc, int new_arc) {
        std::vector<int>& rot = out.rotation[node];
        int pos = rotation_position(rot, anchor_arc);
        check_internal(pos >= 0, "four_join: anchor arc missing");
        rot.insert(rot.begin() + pos, new_arc);
    };

    // Twin faces guarantee the runs [v2, ab, v1] at a, [v1, ab, v2] at b,
    // [a, b] at v1 and [b, a] at v2; the new arcs slot into those corners.
    insert_after(a, ab_at_a, arc_xa);
    insert_before(b, ab_at_b, arc_xb);
    insert_after(v1, out.arc_of_segment(out.graph.edge_index(std::min(a, v1), std::max(a, v1)), 0),
                 arc_xv1);
    insert_after(v2, out.arc_of_segment(out.graph.edge_index(std::min(b, v2), std::max(b, v2)), 0),
                 xv2_at_v2);
    out.rotation[x] = {arc_xa, xv2_at_x, arc_xb, arc_xv1};
    out.rotation[cnode] = {ab_at_b, xv2_at_x, ab_at_a, xv2_at_v2};

    require_valid(out);
    return out;
}

int opposite_face(const Drawing& d, int face, int e) {
    if (e < 0 || e >= d.graph.m() || d.edge_is_crossed(e))
        throw_violation("opposite_face: edge must be an uncrossed edge index");
    std::vector<Face> fs = faces(d);
    if (face < 0 || face >= static_cast<int>(fs.size()))
        throw_violation("opposite_face: face index out of range");
    int arc = d.arc_of_segment(e, 0);
    int fwd = -1, bwd = -1;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        for (int dart : fs[i].darts) {
            if (dart == 2 * arc) fwd = i;
            if (dart == 2 * arc + 1) bwd = i;
        }
    }
    if (fwd != face && bwd != face)
        throw_violation("opposite_face: edge does not bound the given face");
    return fwd == face ? bwd : fwd;
}

int insertion_capacity(const Drawing& d, int face) {
    std::vector<Face> fs = faces(d);
    if (face < 0 || face >= static_cast<int>(fs.size()))
        throw_violation("insertion_capacity: face index out of range");

    auto uncrossed_corners = [&](const Face& f) {
        int k = 0;
        for (int dart : f.darts)
            if (!d.is_crossing_node(dart_tail(d, dart))) ++k;
        return k;
    };

    int capacity = uncrossed_corners(fs[face]);
    std::vector<int> face_of_dart(2 * d.arcs.size(), -1);
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
        for (int dart : fs[i].darts) face_of_dart[dart] = i;
    for (int dart : fs[face].darts) {
        const Arc& t = d.arcs[dart / 2];
        if (d.edge_is_crossed(t.edge)) continue;
        int other = face_of_dart[dart ^ 1];
        if (uncrossed_corners(fs[other]) >= 3) ++capacity;
    }
    return capacity;
}

SkeletonRestriction uncrossed_face_skeleton(const Drawing& d) {
    std::vector<Face> fs = faces(d);
    std::vector<char> keep_edge(d.graph.m(), 0);
    bool any_uncrossed_face = false;
    for (const Face& f : fs) {
        if (f.crossed) continue;
        any_uncrossed_face = true;
        for (int dart : f.darts) {
            const Arc& t = d.arcs[dart / 2];
            check_internal(!d.edge_is_crossed(t.edge), "uncrossed face with crossed boundary edge");
            keep_edge[t.edge] = 1;
        }
    }
    if (!any_uncrossed_face)
        throw_violation("uncrossed_face_skeleton: the drawing has no uncrossed face");

    std::vector<char> keep_vertex(d.graph.n(), 0);
    for (int e = 0; e < d.graph.m(); ++e) {
        if (!keep_edge[e]) continue;
        keep_vertex[d.graph.edges()[e].first] = 1;
        keep_vertex[d.graph.edges()[e].second] = 1;
    }
    SkeletonRestriction out;
    std::vector<int> to_sub(d.graph.n(), -1);
    for (int v = 0; v < d.graph.n(); ++v) {
        if (!keep_vertex[v]) continue;
        to_sub[v] = static_cast<int>(out.to_original.size());
        out.to_original.push_back(v);
    }
    std::vector<Edge> kept_edges;
    for (int e = 0; e < d.graph.m(); ++e)
        if (keep_edge[e])
            kept_edges.push_back({to_sub[d.graph.edges()[e].first],
                                  to_sub[d.graph.edges()[e].second]});
    Drawing& r = out.drawing;
    r.graph = Graph::from_edge_list(static_cast<int>(out.to_original.size()), kept_edges);
    r.arcs = build_arcs(r.graph, {});
    r.rotation.assign(r.graph.n(), {});
    for (int v = 0; v < d.graph.n(); ++v) {
        if (!keep_vertex[v]) continue;
        for (int arc : d.rotation[v]) {
            const Arc& t = d.arcs[arc];
            if (!keep_edge[t.edge]) continue;
            auto [p, q] = d.graph.edges()[t.edge];
            int ne = r.graph.edge_index(to_sub[p], to_sub[q]);
            check_internal(ne >= 0, "uncrossed_face_skeleton: kept edge missing");
            r.rotation[to_sub[v]].push_back(ne);  // crossing-free: arc index == edge index
        }
    }
    require_valid(r);
    return out;
}

VertexRemoval remove_vertex(const Drawing& d, int v) {
    const Graph& g = d.graph;
    if (v < 0 || v >= g.n()) throw_usage("remove_vertex: vertex out of range");

    VertexRemoval out;
    uint64_t kept_mask = (g.n() == 64 ? ~0ULL : ((1ULL << g.n()) - 1)) & ~(1ULL << v);
    InducedSubgraph sub = induced_subgraph(g, kept_mask);
    out.to_original = sub.to_original;
    Drawing& r = out.drawing;
    r.graph = sub.graph;

    auto edge_touches_v = [&](int e) {
        return g.edges()[e].first == v || g.edges()[e].second == v;
    };
    std::vector<int> edge_map(g.m(), -1);  // old -> new edge index
    for (int e = 0; e < g.m(); ++e) {
        if (edge_touches_v(e)) continue;
        auto [p, q] = g.edges()[e];
        edge_map[e] = r.graph.edge_index(sub.to_sub[p], sub.to_sub[q]);
        check_internal(edge_map[e] >= 0, "remove_vertex: surviving edge missing");
    }
    for (auto [e1, e2] : d.crossings) {
        if (edge_touches_v(e1) || edge_touches_v(e2)) continue;  // crossing dissolves
        r.crossings.push_back(std::minmax(edge_map[e1], edge_map[e2]));
    }
    std::sort(r.crossings.begin(), r.crossings.end());
    r.arcs = build_arcs(r.graph, r.crossings);

    // Monotone relabelling keeps each edge's endpoint order, so segment
    // numbers carry over unchanged.
    auto map_arc = [&](int old_arc) {
        const Arc& t = d.arcs[old_arc];
        if (edge_map[t.edge] < 0) return -1;
        int e_new = edge_map[t.edge];
        if (r.edge_is_crossed(e_new)) return r.arc_of_segment(e_new, t.seg);
        return r.arc_of_segment(e_new, 0);  // possibly merged back into one arc
    };

    r.rotation.assign(r.node_count(), {});
    for (int u = 0; u < g.n(); ++u) {
        if (u == v) continue;
        std::vector<int>& rot = r.rotation[sub.to_sub[u]];
        for (int arc : d.rotation[u]) {
            int mapped = map_arc(arc);
            if (mapped >= 0) rot.push_back(mapped);
        }
    }
    for (int j = 0; j < static_cast<int>(d.crossings.size()); ++j) {
        auto [e1, e2] = d.crossings[j];
        if (edge_touches_v(e1) || edge_touches_v(e2)) continue;
        std::pair<int, int> key = std::minmax(edge_map[e1], edge_map[e2]);
        int nj = -1;
        for (int k = 0; k < static_cast<int>(r.crossings.size()); ++k)
            if (r.crossings[k] == key) nj = k;
        check_internal(nj >= 0, "remove_vertex: surviving crossing missing");
        for (int arc : d.rotation[g.n() + j]) {
            int mapped = map_arc(arc);
            check_internal(mapped >= 0, "remove_vertex: crossing arc lost");
            r.rotation[r.graph.n() + nj].push_back(mapped);
        }
    }
    require_valid(r);

    // Locate the face of the result that covers v's old position: at the
    // smallest neighbour u with surviving arcs, the corner opened up where
    // u's arcs toward v were removed belongs to exactly that face.
    out.host_face = -1;
    std::vector<Face> fs = faces(r);
    for (int u : g.neighbors(v)) {
        if (r.rotation[sub.to_sub[u]].empty()) continue;
        const std::vector<int>& old_rot = d.rotation[u];
        int deg = static_cast<int>(old_rot.size());
        int removed_pos = -1;
        for (int i = 0; i < deg; ++i)
            if (map_arc(old_rot[i]) < 0) removed_pos = i;
        check_internal(removed_pos >= 0, "remove_vertex: neighbour kept every arc");
        int next_arc = -1;
        for (int step = 1; step < deg && next_arc < 0; ++step) {
            int cand = map_arc(old_rot[(removed_pos + step) % deg]);
            if (cand >= 0) next_arc = cand;
        }
        check_internal(next_arc >= 0, "remove_vertex: no surviving arc after gap");
        int nu = sub.to_sub[u];
        int dart = 2 * next_arc + (r.arcs[next_arc].a == nu ? 0 : 1);
        for (int i = 0; i < static_cast<int>(fs.size()); ++i)
            for (int fd : fs[i].darts)
                if (fd == dart) out.host_face = i;
        check_internal(out.host_face >= 0, "remove_vertex: host face not found");
        break;
    }
    if (out.host_face < 0 && !fs.empty() && !r.arcs.empty()) out.host_face = 0;
    return out;
}

namespace {

// Breadth-first code of the planarization rooted at `root_dart`; with
// mirror = true the cyclic orders are read in reverse.  Two drawings admit
// an orientation-preserving (resp. reversing) sphere homeomorphism exactly
// when some root gives equal codes.
std::vector<int> rooted_code(const Drawing& d, int root_dart, bool mirror) {
    const int nodes = d.node_count();
    std::vector<int> num(nodes, -1);
    std::vector<int> ref_arc(nodes, -1);
    std::vector<int> order;
    int next_num = 0;

    int root = dart_tail(d, root_dart);
    num[root] = next_num++;
    ref_arc[root] = root_dart / 2;
    order.push_back(root);

    std::vector<int> code;
    for (int qi = 0; qi < static_cast<int>(order.size()); ++qi) {
        int y = order[qi];
        const std::vector<int>& rot = d.rotation[y];
        int deg = static_cast<int>(rot.size());
        int start = rotation_position(rot, ref_arc[y]);
        check_internal(start >= 0, "rooted_code: reference arc missing");
        code.push_back(d.is_crossing_node(y) ? -1 : -2);
        code.push_back(deg);
        for (int i = 0; i < deg; ++i) {
            int arc = mirror ? rot[((start - i) % deg + deg) % deg] : rot[(start + i) % deg];
            int z = d.arc_other_end(arc, y);
            if (num[z] < 0) {
                num[z] = next_num++;
                ref_arc[z] = arc;
                order.push_back(z);
            }
            code.push_back(num[z]);
        }
    }
    return code;
}

}  // namespace

std::string drawing_code(const Drawing& d) {
    if (d.arcs.empty()) {
        if (d.graph.n() != 1)
            throw_violation("drawing_code: planarization must be connected");
        return "trivial";
    }
    UnionFind uf(d.node_count());
    for (const Arc& t : d.arcs) uf.unite(t.a, t.b);
    for (int y = 1; y < d.node_count(); ++y)
        if (uf.find(y) != uf.find(0))
            throw_violation("drawing_code: planarization must be connected");

    std::optional<std::vector<int>> best;
    for (int dart = 0; dart < 2 * static_cast<int>(d.arcs.size()); ++dart) {
        for (bool mirror : {false, true}) {
            std::vector<int> code = rooted_code(d, dart, mirror);
            if (!best || code < *best) best = std::move(code);
        }
    }
    std::ostringstream os;
    for (int i = 0; i < static_cast<int>(best->size()); ++i) {
        if (i) os << ',';
        os << (*best)[i];
    }
    return os.str();
}

std::string serialize_drawing(const Drawing& d) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json j;
    j["n"] = d.graph.n();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : d.graph.edges()) j["edges"].push_back({u, v});
    j["crossings"] = ordered_json::array();
    for (auto [e1, e2] : d.crossings) j["crossings"].push_back({e1, e2});
    ordered_json rot;
    rot["nodes"] = ordered_json::array();
    for (int v = 0; v < d.graph.n(); ++v) rot["nodes"].push_back({"v", v});
    for (int j2 = 0; j2 < static_cast<int>(d.crossings.size()); ++j2)
        rot["nodes"].push_back({"x", j2});
    rot["arcs"] = ordered_json::array();
    for (const Arc& t : d.arcs) rot["arcs"].push_back({t.a, t.b, t.edge, t.seg});
    rot["order"] = ordered_json::array();
    for (const std::vector<int>& r : d.rotation) rot["order"].push_back(r);
    j["rotation"] = rot;
    return j.dump();
}

Drawing parse_drawing(const std::string& text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw_usage(std::string("drawing JSON: ") + e.what());
    }
    try {
        Drawing d;
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        d.graph = Graph::from_edge_list(n, edges);
        for (const auto& c : j.at("crossings"))
            d.crossings.push_back({c.at(0).get<int>(), c.at(1).get<int>()});

        const auto& rot = j.at("rotation");
        const auto& nodes = rot.at("nodes");
        if (static_cast<int>(nodes.size()) != n + static_cast<int>(d.crossings.size()))
            throw_usage("drawing JSON: node list has the wrong length");
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
            std::string kind = nodes.at(i).at(0).get<std::string>();
            int id = nodes.at(i).at(1).get<int>();
            bool ok = (i < n) ? (kind == "v" && id == i) : (kind == "x" && id == i - n);
            if (!ok) throw_usage("drawing JSON: nodes must list vertices then crossings in order");
        }

        d.arcs = build_arcs(d.graph, d.crossings);
        // Accept listed arcs in any order; remap rotation onto the
        // canonical arc list.
        const auto& arcs_json = rot.at("arcs");
        std::vector<int> to_canonical(arcs_json.size(), -1);
        std::vector<char> taken(d.arcs.size(), 0);
        for (int i = 0; i < static_cast<int>(arcs_json.size()); ++i) {
            Arc t{arcs_json.at(i).at(0).get<int>(), arcs_json.at(i).at(1).get<int>(),
                  arcs_json.at(i).at(2).get<int>(), arcs_json.at(i).at(3).get<int>()};
            for (int k = 0; k < static_cast<int>(d.arcs.size()); ++k) {
                if (!taken[k] && d.arcs[k] == t) {
                    to_canonical[i] = k;
                    taken[k] = 1;
                    break;
                }
            }
            if (to_canonical[i] < 0)
                throw_usage("drawing JSON: arc list does not match the edge/crossing structure");
        }
        if (arcs_json.size() != d.arcs.size())
            throw_usage("drawing JSON: arc list has the wrong length");
        for (const auto& r : rot.at("order")) {
            std::vector<int> cyc;
            for (const auto& idx : r) {
                int i = idx.get<int>();
                if (i < 0 || i >= static_cast<int>(to_canonical.size()))
                    throw_usage("drawing JSON: rotation references a bad arc index");
                cyc.push_back(to_canonical[i]);
            }
            d.rotation.push_back(std::move(cyc));
        }
        require_valid(d);
        return d;
    } catch (const json::exception& e) {
        throw_usage(std::string("drawing JSON: ") + e.what());
    }
}

}  // namespace opg
