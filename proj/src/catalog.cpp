#include "opg/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opg/error.hpp"

namespace opg {

namespace {

using int64 = long long;
using int128 = __int128;

struct Pt {
    int64 x = 0, y = 0;
    bool operator==(const Pt&) const = default;
};

int sign(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int128 orient(Pt o, Pt a, Pt b) {
    return int128(a.x - o.x) * (b.y - o.y) - int128(a.y - o.y) * (b.x - o.x);
}

bool on_segment(Pt a, Pt b, Pt p) {
    return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Exact rational point with positive denominator.
struct RatPt {
    int64 xn = 0, yn = 0, d = 1;
    bool operator==(const RatPt& o) const {
        return int128(xn) * o.d == int128(o.xn) * d && int128(yn) * o.d == int128(o.yn) * d;
    }
};

// One straight piece of an edge's polyline.
struct Segment {
    int edge = 0;
    int piece = 0;  // position along the chain, counted from the smaller endpoint
    Pt a, b;
};

struct CrossingHit {
    int e1 = 0, e2 = 0;
    int piece1 = 0, piece2 = 0;
    RatPt at;
};

// Direction vector with exact CCW comparison (half-plane, then cross sign).
struct Dir {
    int64 x = 0, y = 0;
};

int half_plane(const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool dir_less(const Dir& p, const Dir& q) {
    int hp = half_plane(p), hq = half_plane(q);
    if (hp != hq) return hp < hq;
    int128 cr = int128(p.x) * q.y - int128(p.y) * q.x;
    check_internal(cr != 0, "layout: two arcs leave a node in the same direction");
    return cr > 0;
}

RatPt proper_intersection(Pt a, Pt b, Pt c, Pt d) {
    int64 den64 = int64(int128(b.x - a.x) * (d.y - c.y) - int128(b.y - a.y) * (d.x - c.x));
    int64 tn = int64(int128(c.x - a.x) * (d.y - c.y) - int128(c.y - a.y) * (d.x - c.x));
    check_internal(den64 != 0, "layout: parallel segments cannot cross");
    if (den64 < 0) {
        den64 = -den64;
        tn = -tn;
    }
    RatPt r;
    r.d = den64;
    r.xn = a.x * den64 + tn * (b.x - a.x);
    r.yn = a.y * den64 + tn * (b.y - a.y);
    return r;
}

}  // namespace

Drawing drawing_from_layout(const GeometricLayout& layout) {
    const int n = static_cast<int>(layout.points.size());
    std::vector<Pt> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[v] = {layout.points[v].first, layout.points[v].second};
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            check_internal(!(vertex_at[v] == vertex_at[w]), "layout: coincident vertices");

    std::vector<Edge> edge_list;
    for (const PolylineEdge& e : layout.edges) {
        check_internal(0 <= e.u && e.u < e.v && e.v < n, "layout: bad edge endpoints");
        edge_list.push_back({e.u, e.v});
    }
    Graph g = Graph::from_edge_list(n, edge_list);

    // Chains indexed by the graph's edge order.
    std::vector<std::vector<Pt>> chain(g.m());
    for (const PolylineEdge& e : layout.edges) {
        int idx = g.edge_index(e.u, e.v);
        std::vector<Pt> pts = {vertex_at[e.u]};
        for (auto [bx, by] : e.bends) pts.push_back({bx, by});
        pts.push_back(vertex_at[e.v]);
        chain[idx] = std::move(pts);
    }
    std::vector<Segment> segments;
    for (int e = 0; e < g.m(); ++e)
        for (int i = 0; i + 1 < static_cast<int>(chain[e].size()); ++i)
            segments.push_back({e, i, chain[e][i], chain[e][i + 1]});

    // Bends must not collide with vertices or other chains' bends.
    {
        std::vector<Pt> all_points = vertex_at;
        for (int e = 0; e < g.m(); ++e)
            for (int i = 1; i + 1 < static_cast<int>(chain[e].size()); ++i)
                all_points.push_back(chain[e][i]);
        for (int i = 0; i < static_cast<int>(all_points.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(all_points.size()); ++j)
                check_internal(!(all_points[i] == all_points[j]),
                               "layout: coincident chain points");
    }

    // No vertex or bend may lie on a segment except as that segment's own
    // endpoint (and then only where the incidence is legitimate).  Together
    // with distinctness this forces all remaining segment contacts to be
    // transversal interior crossings.
    for (const Segment& s : segments) {
        auto [su, sv] = g.edges()[s.edge];
        for (int v = 0; v < n; ++v) {
            if (!on_segment(s.a, s.b, vertex_at[v])) continue;
            bool incident = (v == su || v == sv);
            bool at_end = vertex_at[v] == s.a || vertex_at[v] == s.b;
            check_internal(incident && at_end, "layout: vertex lies on a foreign segment");
        }
        for (int e = 0; e < g.m(); ++e) {
            for (int i = 1; i + 1 < static_cast<int>(chain[e].size()); ++i) {
                Pt bend = chain[e][i];
                if (!on_segment(s.a, s.b, bend)) continue;
                bool own_joint = s.edge == e && (bend == s.a || bend == s.b);
                check_internal(own_joint, "layout: bend lies on a foreign segment");
            }
        }
    }

    std::vector<CrossingHit> hits;
    for (int i = 0; i < static_cast<int>(segments.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(segments.size()); ++j) {
            const Segment& s = segments[i];
            const Segment& t = segments[j];
            int d1 = sign(orient(t.a, t.b, s.a));
            int d2 = sign(orient(t.a, t.b, s.b));
            int d3 = sign(orient(s.a, s.b, t.a));
            int d4 = sign(orient(s.a, s.b, t.b));
            if (d1 * d2 < 0 && d3 * d4 < 0) {
                check_internal(s.edge != t.edge, "layout: an edge crosses itself");
                hits.push_back({s.edge, t.edge, s.piece, t.piece,
                                proper_intersection(s.a, s.b, t.a, t.b)});
            }
        }
    }

    // Each edge may be crossed once, and hit points must be distinct.
    std::vector<int> hit_count(g.m(), 0);
    for (const CrossingHit& h : hits) {
        ++hit_count[h.e1];
        ++hit_count[h.e2];
    }
    for (int e = 0; e < g.m(); ++e)
        check_internal(hit_count[e] <= 1, "layout: an edge is crossed more than once");
    for (int i = 0; i < static_cast<int>(hits.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(hits.size()); ++j)
            check_internal(!(hits[i].at == hits[j].at), "layout: coincident crossings");

    Drawing d;
    d.graph = g;
    std::vector<int> hit_of_crossing;
    for (int i = 0; i < static_cast<int>(hits.size()); ++i)
        d.crossings.push_back(std::minmax(hits[i].e1, hits[i].e2));
    std::sort(d.crossings.begin(), d.crossings.end());
    hit_of_crossing.assign(hits.size(), -1);
    for (int i = 0; i < static_cast<int>(hits.size()); ++i) {
        std::pair<int, int> key = std::minmax(hits[i].e1, hits[i].e2);
        for (int k = 0; k < static_cast<int>(d.crossings.size()); ++k)
            if (d.crossings[k] == key) hit_of_crossing[k] = i;
    }
    d.arcs = build_arcs(g, d.crossings);
    d.rotation.assign(d.node_count(), {});

    // Vertex rotations: sort the first outgoing direction of each chain.
    for (int v = 0; v < n; ++v) {
        struct Out {
            Dir dir;
            int arc;
        };
        std::vector<Out> outs;
        for (int e = 0; e < g.m(); ++e) {
            auto [u, w] = g.edges()[e];
            if (u != v && w != v) continue;
            const std::vector<Pt>& ch = chain[e];
            Pt from = (u == v) ? ch.front() : ch.back();
            Pt next = (u == v) ? ch[1] : ch[ch.size() - 2];
            int arc = d.arc_at(v, e);
            check_internal(arc >= 0, "layout: missing incident arc");
            outs.push_back({{next.x - from.x, next.y - from.y}, arc});
        }
        std::sort(outs.begin(), outs.end(),
                  [](const Out& p, const Out& q) { return dir_less(p.dir, q.dir); });
        for (const Out& o : outs) d.rotation[v].push_back(o.arc);
    }

    // Crossing rotations: the four curve directions away from the hit point.
    for (int k = 0; k < static_cast<int>(d.crossings.size()); ++k) {
        const CrossingHit& h = hits[hit_of_crossing[k]];
        struct Out {
            Dir dir;
            int arc;
        };
        std::vector<Out> outs;
        auto add_edge_dirs = [&](int e, int piece) {
            const std::vector<Pt>& ch = chain[e];
            Pt toward_u = ch[piece];        // side of the smaller endpoint
            Pt toward_v = ch[piece + 1];
            auto dir_to = [&](Pt p) {
                return Dir{p.x * h.at.d - h.at.xn, p.y * h.at.d - h.at.yn};
            };
            outs.push_back({dir_to(toward_u), d.arc_of_segment(e, 0)});
            outs.push_back({dir_to(toward_v), d.arc_of_segment(e, 1)});
        };
        add_edge_dirs(h.e1, h.piece1);
        add_edge_dirs(h.e2, h.piece2);
        std::sort(outs.begin(), outs.end(),
                  [](const Out& p, const Out& q) { return dir_less(p.dir, q.dir); });
        for (const Out& o : outs) d.rotation[g.n() + k].push_back(o.arc);
    }

    require_valid(d);
    return d;
}

namespace {

GeometricLayout complete_layout(std::vector<std::pair<int64, int64>> pts,
                                std::vector<std::pair<int, int>> skip = {}) {
    GeometricLayout layout;
    layout.points = std::move(pts);
    int n = static_cast<int>(layout.points.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::find(skip.begin(), skip.end(), std::make_pair(u, v)) == skip.end())
                layout.edges.push_back({u, v, {}});
    return layout;
}

// Coordinates of the 6-vertex drawings: an outer triangle (0 top, 1
// bottom-left, 2 bottom-right), two mid vertices (3 left, 4 right) and an
// upper-middle vertex 5.
std::vector<std::pair<int64, int64>> six_vertex_points(int64 shift_x) {
    return {{shift_x + 0, 24}, {shift_x - 12, 4}, {shift_x + 12, 4},
            {shift_x - 4, 10}, {shift_x + 4, 10}, {shift_x + 0, 16}};
}

}  // namespace

Drawing fixture_k5() {
    return drawing_from_layout(complete_layout(
        {{-2598, -1500}, {2598, -1500}, {-1222, -445}, {1222, -445}, {0, 3000}}));
}

Drawing fixture_k6() {
    return drawing_from_layout(complete_layout(
        {{-2598, -1500}, {2598, -1500}, {0, 3000}, {-1299, -750}, {1299, -750}, {0, 1500}}));
}

Drawing fixture_a1() {
    return drawing_from_layout(complete_layout(
        {{-28, 24}, {-40, 4}, {-16, 4}, {-32, 10}, {-24, 10}, {-28, 16}}, {{2, 5}}));
}

Drawing fixture_a2() {
    return drawing_from_layout(complete_layout(six_vertex_points(0), {{0, 5}}));
}

Drawing fixture_a3() {
    return drawing_from_layout(complete_layout(six_vertex_points(0), {{4, 5}}));
}

namespace {

// b1/b2 share the abstract graph: a1's graph plus vertex 6 adjacent to
// {0, 3, 4, 5}; they differ in which side of the twin pair hosts it.
GeometricLayout b_layout(std::vector<std::pair<int64, int64>> pts) {
    GeometricLayout layout = complete_layout(std::move(pts), {{2, 5}});
    // Only the first six vertices form the near-complete part.
    std::vector<PolylineEdge> edges;
    for (const PolylineEdge& e : layout.edges)
        if (e.v < 6) edges.push_back(e);
    layout.edges = std::move(edges);
    return layout;
}

}  // namespace

Drawing fixture_b1() {
    GeometricLayout layout =
        b_layout({{-48, 44}, {-72, 4}, {-24, 4}, {-60, 10}, {-36, 10}, {-48, 24}, {-48, 14}});
    layout.edges.push_back({0, 6, {{-42, 16}}});
    layout.edges.push_back({3, 6, {}});
    layout.edges.push_back({4, 6, {}});
    layout.edges.push_back({5, 6, {}});
    return drawing_from_layout(layout);
}

Drawing fixture_b2() {
    GeometricLayout layout =
        b_layout({{12, 44}, {-12, 4}, {36, 4}, {0, 10}, {24, 10}, {8, 24}, {16, 24}});
    layout.edges.push_back({0, 6, {}});
    layout.edges.push_back({3, 6, {{12, 15}}});
    layout.edges.push_back({4, 6, {}});
    layout.edges.push_back({5, 6, {}});
    return drawing_from_layout(layout);
}

Drawing fixture_b3() {
    GeometricLayout layout =
        b_layout({{72, 44}, {48, 4}, {96, 4}, {60, 10}, {84, 10}, {68, 24}, {76, 24}});
    layout.edges.push_back({0, 6, {}});
    layout.edges.push_back({2, 6, {}});
    layout.edges.push_back({3, 6, {}});
    layout.edges.push_back({4, 6, {}});
    return drawing_from_layout(layout);
}

Drawing fixture_g0() {
    GeometricLayout layout;
    layout.points = {{0, 160},  {72, 16},  {-72, 16}, {-56, 32}, {-28, 72},
                     {-8, 60},  {4, 92},   {16, 72},  {32, 76},  {24, 56},
                     {-12, 40}, {-100, 0}, {96, 0}};
    const std::vector<std::pair<int, int>> raw_edges = {
        {0, 1},  {0, 2},  {1, 2},  {0, 6},   {6, 7},   {7, 8},  {0, 8},  {0, 7},  {3, 4},
        {2, 3},  {3, 10}, {1, 10}, {1, 3},   {4, 5},   {0, 4},  {0, 3},  {5, 10}, {3, 5},
        {5, 6},  {0, 5},  {5, 9},  {1, 9},   {1, 5},   {7, 9},  {1, 7},  {1, 8},  {0, 11},
        {2, 11}, {11, 12}, {1, 11}, {2, 12}, {1, 12},  {0, 12}, {5, 7}};
    for (auto [u, v] : raw_edges) layout.edges.push_back({std::min(u, v), std::max(u, v), {}});
    return drawing_from_layout(layout);
}

Drawing fixture_d_pattern(int k) {
    GeometricLayout layout;
    auto kite = [&](int p, int q, int t1, int t2) {
        for (auto [u, v] : {std::pair{p, q}, {p, t1}, {q, t1}, {p, t2}, {q, t2}})
            layout.edges.push_back({std::min(u, v), std::max(u, v), {}});
    };
    switch (k) {
        case 1:
            // Chain of faces [0,1,2], [1,2,3], [2,3,4], [2,4,5]: kites on
            // diagonal (1,2) and on diagonal (2,4).
            layout.points = {{-61, 10}, {-52, 20}, {-52, 0}, {-40, 20}, {-32, 10}, {-40, 0}};
            for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                {2, 4}, {2, 5}, {4, 5}, {3, 4}})
                layout.edges.push_back({u, v, {}});
            break;
        case 2:
            // Chain of faces [0,1,2], [1,2,3], [2,3,5], [3,4,5]: kites on
            // diagonal (1,2) and on diagonal (3,5).
            layout.points = {{-61, 10}, {-52, 20}, {-52, 0}, {-40, 20}, {-32, 10}, {-40, 0}};
            for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                {2, 5}, {3, 5}, {3, 4}, {4, 5}})
                layout.edges.push_back({u, v, {}});
            break;
        case 3:
            layout.points = {{0, 10}, {20, 10}, {10, 20}, {10, 0},
                             {100, 10}, {120, 10}, {110, 20}, {110, 0}};
            kite(0, 1, 2, 3);
            kite(4, 5, 6, 7);
            break;
        case 4:
            // Two kites sharing the tip vertex 3.
            layout.points = {{0, 10}, {20, 10}, {10, 20}, {10, 0},
                             {0, -10}, {20, -10}, {10, -20}};
            kite(0, 1, 2, 3);
            kite(4, 5, 3, 6);
            break;
        case 5:
            // Vertex 3 is a tip of the first kite and a diagonal end of the
            // second.
            layout.points = {{0, 10}, {20, 10}, {10, 20}, {10, 0},
                             {10, -20}, {0, -10}, {20, -10}};
            kite(0, 1, 2, 3);
            kite(3, 4, 5, 6);
            break;
        case 6:
            // Vertex 0 is a diagonal end of both kites.
            layout.points = {{0, 0}, {20, 0}, {10, 10}, {10, -10},
                             {-20, 0}, {-10, 10}, {-10, -10}};
            kite(0, 1, 2, 3);
            kite(0, 4, 5, 6);
            break;
        default:
            throw_usage("fixture_d_pattern: k must be in 1..6");
    }
    std::sort(layout.edges.begin(), layout.edges.end(),
              [](const PolylineEdge& a, const PolylineEdge& b) {
                  return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
              });
    return drawing_from_layout(layout);
}

}  // namespace opg
