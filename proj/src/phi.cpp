#include "opg/phi.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <utility>

#include "opg/catalog.hpp"
#include "opg/chordal.hpp"
#include "opg/error.hpp"

namespace opg {

namespace {

const std::string& seed_code_1() {
    static const std::string code = drawing_code(fixture_b1());
    return code;
}

const std::string& seed_code_2() {
    static const std::string code = drawing_code(fixture_b2());
    return code;
}

// The planarization (crossing nodes included) must be connected for the
// canonical code to exist; arcs are its edges.
bool planarization_connected(const Drawing& d) {
    int n = d.node_count();
    if (n == 0) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Arc& a : d.arcs) parent[find(a.a)] = find(a.b);
    int root = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != root) return false;
    return true;
}

bool peel_to_seed(const Drawing& d, PhiMembership& out) {
    out.codes.push_back(drawing_code(d));
    int n = d.graph.n();
    if (n == 7) {
        if (out.codes.back() == seed_code_1() || out.codes.back() == seed_code_2()) return true;
        out.reason = "rejected: the order-7 base drawing matches neither seed";
        return false;
    }
    bool candidate_found = false;
    for (int v = 0; v < n; ++v) {
        if (d.graph.degree(v) != 4 || !is_simplicial(d.graph, v)) continue;
        candidate_found = true;
        VertexRemoval rem = remove_vertex(d, v);
        if (!planarization_connected(rem.drawing)) continue;
        size_t codes_mark = out.codes.size();
        size_t peel_mark = out.peeled.size();
        out.peeled.push_back(v);
        if (peel_to_seed(rem.drawing, out)) return true;
        out.codes.resize(codes_mark);
        out.peeled.resize(peel_mark);
    }
    out.reason = candidate_found
                     ? "rejected: every removal sequence bottoms out away from the seeds"
                     : "rejected: no simplicial degree-4 vertex to remove at order " +
                           std::to_string(n);
    return false;
}

// Designated face triples (and, for the chained shapes, forbidden vertex
// pairs) of each reference pattern, in the pattern's own vertex ids.
struct PatternSpec {
    std::array<std::array<int, 3>, 4> face_triples;
    std::vector<std::pair<int, int>> non_edges;
};

PatternSpec pattern_spec(int k) {
    switch (k) {
        case 1:
            return {{{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {2, 4, 5}}},
                    {{0, 4}, {1, 4}, {1, 5}}};
        case 2:
            return {{{{0, 1, 2}, {1, 2, 3}, {2, 3, 5}, {3, 4, 5}}},
                    {{0, 4}, {1, 4}, {1, 5}}};
        case 3:
            return {{{{0, 1, 2}, {0, 1, 3}, {4, 5, 6}, {4, 5, 7}}}, {}};
        case 4:
            return {{{{0, 1, 2}, {0, 1, 3}, {3, 4, 5}, {4, 5, 6}}}, {}};
        case 5:
            return {{{{0, 1, 2}, {0, 1, 3}, {3, 4, 5}, {3, 4, 6}}}, {}};
        case 6:
            return {{{{0, 1, 2}, {0, 1, 3}, {0, 4, 5}, {0, 4, 6}}}, {}};
        default:
            throw_usage("pattern_spec: pattern index must be between 1 and 6");
    }
}

// Neighbour ids of v in rotation order (crossing-free drawings only, where
// every rotation entry is the single arc of its edge).
std::vector<int> rotation_neighbors(const Drawing& d, int v) {
    std::vector<int> out;
    out.reserve(d.rotation[v].size());
    for (int arc : d.rotation[v]) {
        const Arc& a = d.arcs[arc];
        out.push_back(a.a == v ? a.b : a.a);
    }
    return out;
}

bool cyclic_equal(const std::vector<int>& x, const std::vector<int>& y) {
    size_t n = x.size();
    if (y.size() != n) return false;
    if (n == 0) return true;
    for (size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = x[i] == y[(i + shift) % n];
        if (ok) return true;
    }
    return false;
}

// Does phi preserve every rotation, either all as given or all mirrored?
bool rotations_match(const Drawing& pat, const Drawing& tgt, const std::vector<int>& phi) {
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        bool all = true;
        for (int v = 0; v < pat.graph.n() && all; ++v) {
            std::vector<int> want = rotation_neighbors(pat, v);
            for (int& w : want) w = phi[w];
            std::vector<int> have = rotation_neighbors(tgt, phi[v]);
            if (mirrored) std::reverse(have.begin(), have.end());
            all = cyclic_equal(want, have);
        }
        if (all) return true;
    }
    return false;
}

// Backtracking search over graph isomorphisms pattern -> target; each one
// that also respects rotations (up to one global mirror) is offered to
// `accept`, and the first accepted mapping wins.
template <typename Accept>
bool find_drawing_isomorphism(const Drawing& pat, const Drawing& tgt, std::vector<int>& phi,
                              std::vector<char>& used, int next, Accept&& accept) {
    int n = pat.graph.n();
    if (next == n) {
        if (!rotations_match(pat, tgt, phi)) return false;
        return accept(phi);
    }
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        if (tgt.graph.degree(cand) != pat.graph.degree(next)) continue;
        bool consistent = true;
        for (int q = 0; q < next && consistent; ++q)
            consistent = pat.graph.has_edge(next, q) == tgt.graph.has_edge(cand, phi[q]);
        if (!consistent) continue;
        phi[next] = cand;
        used[cand] = 1;
        if (find_drawing_isomorphism(pat, tgt, phi, used, next + 1, accept)) return true;
        used[cand] = 0;
    }
    return false;
}

std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> degs(g.n());
    for (int v = 0; v < g.n(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace

const PhiMember* PhiAtlas::find(int order, const std::string& code) const {
    auto it = by_order.find(order);
    if (it == by_order.end()) return nullptr;
    for (const PhiMember& m : it->second)
        if (m.code == code) return &m;
    return nullptr;
}

PhiAtlas generate_phi(int max_order, int hard_cap) {
    if (max_order < 7) throw_usage("generate_phi: max_order must be at least 7");
    if (max_order > hard_cap)
        throw_scale("generate_phi: max_order " + std::to_string(max_order) +
                    " exceeds the cap of " + std::to_string(hard_cap));
    PhiAtlas atlas;
    atlas.max_order = max_order;

    std::vector<PhiMember> seeds;
    for (Drawing d : {fixture_b1(), fixture_b2()}) {
        PhiMember m;
        m.code = drawing_code(d);
        m.drawing = std::move(d);
        seeds.push_back(std::move(m));
    }
    std::sort(seeds.begin(), seeds.end(),
              [](const PhiMember& x, const PhiMember& y) { return x.code < y.code; });
    atlas.by_order[7] = std::move(seeds);

    for (int order = 8; order <= max_order; ++order) {
        std::map<std::string, PhiMember> next;
        const std::vector<PhiMember>& prev = atlas.by_order[order - 1];
        for (int pi = 0; pi < static_cast<int>(prev.size()); ++pi) {
            for (const TwinPair& t : twin_faces(prev[pi].drawing)) {
                Drawing child = four_join(prev[pi].drawing, t.f1, t.f2);
                std::string code = drawing_code(child);
                if (next.count(code)) continue;
                PhiMember m;
                m.drawing = std::move(child);
                m.code = code;
                m.parent = pi;
                m.parent_f1 = t.f1;
                m.parent_f2 = t.f2;
                next.emplace(code, std::move(m));
            }
        }
        std::vector<PhiMember>& level = atlas.by_order[order];
        for (auto& [code, m] : next) level.push_back(std::move(m));
    }
    return atlas;
}

PhiMembership phi_membership(const Drawing& d) {
    PhiMembership out;
    if (auto bad = validate(d)) {
        out.reason = "rejected: structurally invalid drawing (" + bad->code + ": " + bad->detail + ")";
        return out;
    }
    if (d.graph.n() < 7) throw_violation("phi_membership: drawing has fewer than 7 vertices");
    if (!planarization_connected(d)) {
        out.reason = "rejected: disconnected drawing";
        return out;
    }
    if (peel_to_seed(d, out)) {
        out.member = true;
        out.reason = "member: removal sequence reaches a seed drawing";
    }
    return out;
}

std::map<int, std::vector<Graph>> phi_graphs(int max_order) {
    PhiAtlas atlas = generate_phi(max_order);
    std::map<int, std::vector<Graph>> out;
    for (const auto& [order, members] : atlas.by_order) {
        std::set<std::vector<uint64_t>> seen;
        for (const PhiMember& m : members)
            if (seen.insert(canonical_form(m.drawing.graph).code).second)
                out[order].push_back(m.drawing.graph);
    }
    return out;
}

std::optional<PatternMatch> match_uncrossed_pattern(const Drawing& d) {
    SkeletonRestriction skel = uncrossed_face_skeleton(d);
    const Drawing& s = skel.drawing;

    // Uncrossed triangular faces of d, indexed by sorted vertex triple
    // (a triple can bound two faces, e.g. either side of a lone triangle).
    std::vector<Face> d_faces = faces(d);
    std::map<std::vector<int>, std::vector<int>> faces_by_triple;
    for (int i = 0; i < static_cast<int>(d_faces.size()); ++i) {
        if (d_faces[i].crossed || d_faces[i].darts.size() != 3) continue;
        std::vector<int> nodes = face_nodes(d, d_faces[i]);
        std::sort(nodes.begin(), nodes.end());
        faces_by_triple[nodes].push_back(i);
    }
    std::set<std::pair<int, int>> twins;
    for (const TwinPair& t : twin_faces(d))
        twins.insert(std::minmax(t.f1, t.f2));

    // Do the two designated triples land on a twin face pair of d?
    auto twin_pair_present = [&](const std::vector<int>& t1, const std::vector<int>& t2) {
        auto i1 = faces_by_triple.find(t1);
        auto i2 = faces_by_triple.find(t2);
        if (i1 == faces_by_triple.end() || i2 == faces_by_triple.end()) return false;
        for (int f1 : i1->second)
            for (int f2 : i2->second)
                if (f1 != f2 && twins.count(std::minmax(f1, f2))) return true;
        return false;
    };

    std::vector<int> s_degrees = degree_multiset(s.graph);
    for (int k = 1; k <= 6; ++k) {
        Drawing pat = fixture_d_pattern(k);
        if (pat.graph.n() != s.graph.n() || pat.graph.m() != s.graph.m()) continue;
        if (degree_multiset(pat.graph) != s_degrees) continue;
        PatternSpec spec = pattern_spec(k);

        std::vector<int> result;
        auto accept = [&](const std::vector<int>& phi) {
            auto mapped = [&](const std::array<int, 3>& tri) {
                std::vector<int> out = {skel.to_original[phi[tri[0]]],
                                        skel.to_original[phi[tri[1]]],
                                        skel.to_original[phi[tri[2]]]};
                std::sort(out.begin(), out.end());
                return out;
            };
            if (!twin_pair_present(mapped(spec.face_triples[0]), mapped(spec.face_triples[1])))
                return false;
            if (!twin_pair_present(mapped(spec.face_triples[2]), mapped(spec.face_triples[3])))
                return false;
            for (auto [p, q] : spec.non_edges)
                if (d.graph.has_edge(skel.to_original[phi[p]], skel.to_original[phi[q]]))
                    return false;
            result.assign(phi.begin(), phi.end());
            for (int& v : result) v = skel.to_original[v];
            return true;
        };

        std::vector<int> phi(pat.graph.n(), -1);
        std::vector<char> used(s.graph.n(), 0);
        if (find_drawing_isomorphism(pat, s, phi, used, 0, accept))
            return PatternMatch{k, std::move(result)};
    }
    return std::nullopt;
}

}  // namespace opg
