#include "opg/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "opg/catalog.hpp"
#include "opg/chordal.hpp"
#include "opg/connectivity.hpp"
#include "opg/error.hpp"

namespace opg {
namespace {

// splitmix64/v1: the generator named by kGeneratorAlgorithm.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound); bound must be positive.
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

// The copy vertices glued onto the host face, in attach order.
constexpr std::array<int, 3> kTriangle{0, 11, 12};

bool cyclic_equal3(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int s = 0; s < 3; ++s)
        if (a[0] == b[s] && a[1] == b[(s + 1) % 3] && a[2] == b[(s + 2) % 3]) return true;
    return false;
}

// A triangular face resolved into its walk vertices and, per vertex, the
// corner's bounding arcs: arc_in carries the dart arriving at the vertex
// along the walk and arc_out the dart leaving it, so arc_out is the
// rotation-successor of arc_in at that vertex.
struct TriCorner {
    int arc_in = -1;
    int arc_out = -1;
};

struct TriFace {
    int index = -1;
    std::array<int, 3> tails{};
    std::array<TriCorner, 3> corner{};
};

TriFace analyze_triangle(const Drawing& d, const std::vector<Face>& fs, int face_index) {
    const Face& f = fs[face_index];
    check_internal(f.darts.size() == 3 && !f.crossed,
                   "analyze_triangle: face is not an uncrossed 3-region");
    TriFace t;
    t.index = face_index;
    for (int i = 0; i < 3; ++i) {
        t.tails[i] = dart_tail(d, f.darts[i]);
        t.corner[i].arc_out = f.darts[i] / 2;
        t.corner[i].arc_in = f.darts[(i + 2) % 3] / 2;
    }
    return t;
}

// Reverses the orientation of the sphere: every face walk runs backwards.
Drawing mirrored(Drawing d) {
    for (auto& rot : d.rotation) std::reverse(rot.begin(), rot.end());
    return d;
}

// The copy's gluing site: its qualifying face on {0, 11, 12}.
TriFace copy_gluing_face(const Drawing& copy) {
    auto fs = faces(copy);
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        if (fs[i].crossed || fs[i].darts.size() != 3) continue;
        std::array<int, 3> tails{};
        for (int j = 0; j < 3; ++j) tails[j] = dart_tail(copy, fs[i].darts[j]);
        std::array<int, 3> sorted = tails;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == kTriangle) return analyze_triangle(copy, fs, i);
    }
    check_internal(false, "glue_g0: the pasted copy has no gluing face");
    return {};
}

int index_of(const std::vector<int>& list, int value) {
    auto it = std::find(list.begin(), list.end(), value);
    check_internal(it != list.end(), "glue_g0: expected list entry is missing");
    return static_cast<int>(it - list.begin());
}

}  // namespace

GraphWithDrawing g0() {
    GraphWithDrawing out;
    out.drawing = fixture_g0();
    out.graph = out.drawing.graph;
    return out;
}

std::vector<int> qualifying_faces(const Drawing& d) {
    std::vector<int> out;
    auto fs = faces(d);
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        const Face& f = fs[i];
        if (f.crossed || f.darts.size() != 3) continue;
        std::array<int, 3> tails{};
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) {
            tails[j] = dart_tail(d, f.darts[j]);
            if (d.edge_is_crossed(d.arcs[f.darts[j] / 2].edge)) ok = false;
        }
        if (!ok || tails[0] == tails[1] || tails[1] == tails[2] || tails[0] == tails[2]) continue;
        out.push_back(i);
    }
    return out;
}

GlueResult glue_g0(const GlueSpec& spec) {
    const Drawing& host = spec.host;
    if (auto bad = validate(host))
        throw_violation("glue_g0: invalid host drawing (" + bad->code + ": " + bad->detail + ")");

    auto host_faces = faces(host);
    if (spec.face < 0 || spec.face >= static_cast<int>(host_faces.size()))
        throw_usage("glue_g0: face index " + std::to_string(spec.face) +
                    " out of range (the host has " + std::to_string(host_faces.size()) +
                    " faces)");
    const Face& f = host_faces[spec.face];
    if (f.crossed)
        throw_violation("glue_g0: the chosen face is not uncrossed");
    if (f.darts.size() != 3)
        throw_violation("glue_g0: the chosen face is not a 3-region");
    for (int dart : f.darts)
        if (host.edge_is_crossed(host.arcs[dart / 2].edge))
            throw_violation("glue_g0: a boundary edge of the chosen face is crossed");

    TriFace hf = analyze_triangle(host, host_faces, spec.face);
    if (hf.tails[0] == hf.tails[1] || hf.tails[1] == hf.tails[2] || hf.tails[0] == hf.tails[2])
        throw_violation("glue_g0: the chosen face must have three distinct corner vertices");
    {
        std::array<int, 3> a = spec.attach;
        std::array<int, 3> b = hf.tails;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw_usage("glue_g0: attach must list the three vertices of the chosen face");
    }

    const int nh = host.graph.n();
    if (nh + 10 > 64)
        throw_scale("glue_g0: the glued graph would exceed 64 vertices");

    // Copy vertex carried by each host attach vertex.
    auto label_of = [&](int w) {
        for (int j = 0; j < 3; ++j)
            if (spec.attach[j] == w) return kTriangle[j];
        check_internal(false, "glue_g0: attach lookup failed");
        return -1;
    };

    // Fit the copy's face walk against the host's: pasting one sphere into
    // a face of the other closes up iff the two walks traverse the shared
    // triangle in opposite cyclic orders, so mirror the copy when they
    // agree instead.
    Drawing copy = fixture_g0();
    TriFace cf = copy_gluing_face(copy);
    std::array<int, 3> host_walk_labels{label_of(hf.tails[0]), label_of(hf.tails[1]),
                                        label_of(hf.tails[2])};
    if (cyclic_equal3(cf.tails, host_walk_labels)) {
        copy = mirrored(copy);
        cf = copy_gluing_face(copy);
    }
    {
        std::array<int, 3> reversed{host_walk_labels[0], host_walk_labels[2],
                                    host_walk_labels[1]};
        check_internal(cyclic_equal3(cf.tails, reversed),
                       "glue_g0: face walks still agree after mirroring");
    }

    GlueResult out;
    {
        int next_id = nh;
        for (int i = 0; i < 13; ++i) {
            if (i == 0 || i == 11 || i == 12) {
                for (int j = 0; j < 3; ++j)
                    if (kTriangle[j] == i) out.copy_ids[i] = spec.attach[j];
            } else {
                out.copy_ids[i] = next_id++;
            }
        }
        check_internal(next_id == nh + 10, "glue_g0: fresh id bookkeeping is off");
    }

    // Merged graph: host edges plus relabelled copy edges; the three
    // triangle edges coincide.
    std::vector<Edge> edges = host.graph.edges();
    std::set<Edge> seen(edges.begin(), edges.end());
    for (auto [u, v] : copy.graph.edges()) {
        int mu = out.copy_ids[u];
        int mv = out.copy_ids[v];
        Edge e{std::min(mu, mv), std::max(mu, mv)};
        if (seen.insert(e).second) edges.push_back(e);
    }
    Graph merged = Graph::from_edge_list(nh + 10, std::move(edges));
    check_internal(merged.m() == host.graph.m() + copy.graph.m() - 3,
                   "glue_g0: unexpected edge count after identification");

    // Crossings of both parts, lifted to merged edge indices.
    auto lift_pair = [&](const Graph& src, const std::vector<int>& vmap,
                         std::pair<int, int> cr) {
        auto [u1, v1] = src.edges()[cr.first];
        auto [u2, v2] = src.edges()[cr.second];
        int a = merged.edge_index(std::min(vmap[u1], vmap[v1]), std::max(vmap[u1], vmap[v1]));
        int b = merged.edge_index(std::min(vmap[u2], vmap[v2]), std::max(vmap[u2], vmap[v2]));
        check_internal(a >= 0 && b >= 0, "glue_g0: crossing edge missing after merge");
        if (a > b) std::swap(a, b);
        return std::pair<int, int>{a, b};
    };
    std::vector<int> host_vmap(nh);
    std::iota(host_vmap.begin(), host_vmap.end(), 0);
    std::vector<int> copy_vmap(out.copy_ids.begin(), out.copy_ids.end());

    std::vector<std::pair<int, int>> host_pairs, copy_pairs;
    for (auto cr : host.crossings) host_pairs.push_back(lift_pair(host.graph, host_vmap, cr));
    for (auto cr : copy.crossings) copy_pairs.push_back(lift_pair(copy.graph, copy_vmap, cr));

    Drawing glued;
    glued.graph = merged;
    glued.crossings = host_pairs;
    glued.crossings.insert(glued.crossings.end(), copy_pairs.begin(), copy_pairs.end());
    std::sort(glued.crossings.begin(), glued.crossings.end());
    glued.arcs = build_arcs(merged, glued.crossings);
    glued.rotation.assign(glued.node_count(), {});

    auto crossing_node = [&](std::pair<int, int> p) {
        auto it = std::lower_bound(glued.crossings.begin(), glued.crossings.end(), p);
        check_internal(it != glued.crossings.end() && *it == p, "glue_g0: crossing lookup failed");
        return merged.n() + static_cast<int>(it - glued.crossings.begin());
    };

    // Arc of the glued drawing carrying arc `arc` of `src` under `vmap`.
    auto arc_mapper = [&](const Drawing& src, const std::vector<int>& vmap) {
        return [&src, &vmap, &glued, &merged](int arc) {
            const Arc& t = src.arcs[arc];
            auto [u, v] = src.graph.edges()[t.edge];
            int mu = vmap[u];
            int mv = vmap[v];
            int e = merged.edge_index(std::min(mu, mv), std::max(mu, mv));
            check_internal(e >= 0, "glue_g0: arc maps to a missing edge");
            check_internal(glued.edge_is_crossed(e) == src.edge_is_crossed(t.edge),
                           "glue_g0: crossedness changed under the merge");
            int seg = t.seg;
            if (src.edge_is_crossed(t.edge) && mu > mv) seg = 1 - seg;
            int a = glued.arc_of_segment(e, seg);
            check_internal(a >= 0, "glue_g0: merged arc lookup failed");
            return a;
        };
    };
    auto map_host_arc = arc_mapper(host, host_vmap);
    auto map_copy_arc = arc_mapper(copy, copy_vmap);

    std::vector<bool> is_attach(nh, false);
    for (int w : spec.attach) is_attach[w] = true;

    for (int w = 0; w < nh; ++w) {
        if (is_attach[w]) continue;
        for (int arc : host.rotation[w]) glued.rotation[w].push_back(map_host_arc(arc));
    }
    for (int i = 0; i < 13; ++i) {
        if (i == 0 || i == 11 || i == 12) continue;
        for (int arc : copy.rotation[i])
            glued.rotation[out.copy_ids[i]].push_back(map_copy_arc(arc));
    }
    for (std::size_t j = 0; j < host_pairs.size(); ++j) {
        int node = crossing_node(host_pairs[j]);
        for (int arc : host.rotation[host.graph.n() + static_cast<int>(j)])
            glued.rotation[node].push_back(map_host_arc(arc));
    }
    for (std::size_t j = 0; j < copy_pairs.size(); ++j) {
        int node = crossing_node(copy_pairs[j]);
        for (int arc : copy.rotation[copy.graph.n() + static_cast<int>(j)])
            glued.rotation[node].push_back(map_copy_arc(arc));
    }

    // Attach vertices: the host rotation with the copy's arcs spliced into
    // the corner the face occupied.  The corner boundary arcs coincide
    // pairwise (host in = copy out, host out = copy in), and the copy
    // contributes the run strictly between its own corner arcs.
    for (int j = 0; j < 3; ++j) {
        int w = spec.attach[j];
        const TriCorner& hc = hf.corner[index_of(
            std::vector<int>(hf.tails.begin(), hf.tails.end()), w)];
        const TriCorner& cc = cf.corner[index_of(
            std::vector<int>(cf.tails.begin(), cf.tails.end()), kTriangle[j])];

        check_internal(map_copy_arc(cc.arc_out) == map_host_arc(hc.arc_in),
                       "glue_g0: corner arcs do not pair up (incoming side)");
        check_internal(map_copy_arc(cc.arc_in) == map_host_arc(hc.arc_out),
                       "glue_g0: corner arcs do not pair up (outgoing side)");

        const std::vector<int>& crot = copy.rotation[kTriangle[j]];
        int pos_out = index_of(crot, cc.arc_out);
        std::vector<int> run;
        for (std::size_t s = 1; s < crot.size(); ++s) {
            int a = crot[(pos_out + s) % crot.size()];
            if (a == cc.arc_in) break;
            run.push_back(a);
        }
        check_internal(run.size() == crot.size() - 2, "glue_g0: copy corner arcs not adjacent");

        const std::vector<int>& hrot = host.rotation[w];
        int pos_in = index_of(hrot, hc.arc_in);
        check_internal(hrot[(pos_in + 1) % hrot.size()] == hc.arc_out,
                       "glue_g0: host corner arcs not adjacent");
        std::vector<int>& dst = glued.rotation[w];
        for (std::size_t s = 0; s < hrot.size(); ++s) {
            dst.push_back(map_host_arc(hrot[(pos_in + s) % hrot.size()]));
            if (s == 0)
                for (int a : run) dst.push_back(map_copy_arc(a));
        }
    }

    require_valid(glued);
    out.graph = merged;
    out.drawing = std::move(glued);
    return out;
}

GlueChainResult glue_chain(int depth) {
    if (depth < 0) throw_usage("glue_chain: depth must be >= 0");
    if (13 + 10 * depth > 64)
        throw_scale("glue_chain: depth " + std::to_string(depth) +
                    " would exceed 64 vertices (max depth 5)");

    GraphWithDrawing base = g0();
    Drawing current = std::move(base.drawing);
    std::array<int, 13> last_ids{};
    std::iota(last_ids.begin(), last_ids.end(), 0);

    for (int step = 0; step < depth; ++step) {
        auto sites = qualifying_faces(current);
        check_internal(!sites.empty(), "glue_chain: no qualifying face to glue into");
        GlueSpec spec;
        spec.face = sites.front();
        TriFace tf = analyze_triangle(current, faces(current), spec.face);
        spec.attach = tf.tails;
        spec.host = std::move(current);
        GlueResult r = glue_g0(spec);
        current = std::move(r.drawing);
        last_ids = r.copy_ids;
    }

    GlueChainResult out;
    out.graph = current.graph;
    out.drawing = std::move(current);
    out.obstruction_cut = {last_ids[0], last_ids[1], last_ids[3], last_ids[5], last_ids[7]};
    std::sort(out.obstruction_cut.begin(), out.obstruction_cut.end());
    check_internal(component_count_after_removal(
                       out.graph, vertex_list_mask(out.obstruction_cut)) == 6,
                   "glue_chain: the five-vertex cut must leave six components");
    return out;
}

namespace {

void check_generator_args(const char* who, int n, int k, int min_n) {
    if (k < 1) throw_usage(std::string(who) + ": k must be >= 1");
    if (n < min_n)
        throw_usage(std::string(who) + ": needs n >= k + " + std::to_string(min_n - k) +
                    " (got n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
    if (n > 64) throw_scale(std::string(who) + ": at most 64 vertices are supported");
}

}  // namespace

Graph random_k_tree(int n, int k, std::uint64_t seed) {
    check_generator_args("random_k_tree", n, k, k + 1);
    SplitMix64 rng(seed);
    Graph g = Graph::complete(k + 1);

    // All k-cliques of the graph so far; K_{k+1} has one per omitted vertex.
    std::vector<std::vector<int>> cliques;
    for (int omit = 0; omit <= k; ++omit) {
        std::vector<int> c;
        for (int v = 0; v <= k; ++v)
            if (v != omit) c.push_back(v);
        cliques.push_back(std::move(c));
    }

    for (int v = k + 1; v < n; ++v) {
        const std::vector<int> host = cliques[rng.below(static_cast<int>(cliques.size()))];
        g = g.add_vertex(host);
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> c;
            for (int i = 0; i < k; ++i)
                if (i != drop) c.push_back(host[i]);
            c.push_back(v);
            cliques.push_back(std::move(c));
        }
    }
    return g;
}

Graph two_simplicial_k_tree(int n, int k, std::uint64_t seed) {
    check_generator_args("two_simplicial_k_tree", n, k, k + 2);
    constexpr int kRetryBudget = 8;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(attempt));
        Graph g = Graph::complete(k + 1);

        // Rolling front: a k-clique always containing the newest vertex.
        std::vector<int> front;
        {
            int drop = rng.below(k);  // one of 0..k-1, so vertex k stays in the front
            for (int v = 0; v <= k; ++v)
                if (v != drop) front.push_back(v);
        }
        for (int v = k + 1; v < n; ++v) {
            g = g.add_vertex(front);
            front[rng.below(k)] = v;
        }
        if (simplicial_vertices(g).size() == 2) return g;
    }
    throw_internal("two_simplicial_k_tree: retry budget exhausted without two simplicial vertices");
}

}  // namespace opg
