#include "zonocone/zonotope_faces.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace zonocone {

LabelSpace::LabelSpace(Graph g, std::uint64_t max_patterns) : g_(std::move(g)) {
    int m = g_.edge_count();
    contractions_.reserve(m);
    orients_.reserve(m);
    offset_.reserve(m + 1);
    triangles_ = triangles(g_);
    int off = 0;
    for (int e = 0; e < m; ++e) {
        offset_.push_back(off);
        contractions_.push_back(contract_edge(g_, e));
        orients_.push_back(enumerate_acyclic(contractions_.back().graph, max_patterns));
        for (OrientBits b : orients_.back()) labels_.push_back({e, b});
        off += static_cast<int>(orients_.back().size());
    }
    offset_.push_back(off);
}

int LabelSpace::index_of(int edge, OrientBits rho) const {
    const auto& v = orients_.at(edge);
    auto it = std::lower_bound(v.begin(), v.end(), rho);
    if (it == v.end() || *it != rho) throw std::invalid_argument("no such edge label");
    return offset_[edge] + static_cast<int>(it - v.begin());
}

std::vector<EdgeLabel> zonotope_edges(const LabelSpace& ls) { return ls.labels(); }

std::pair<OrientBits, OrientBits> edge_endpoints(const LabelSpace& ls, const EdgeLabel& l) {
    const Graph& g = ls.graph();
    const Contraction& c = ls.edge_contraction(l.edge);
    OrientBits base = 0;
    for (int k = 0; k < g.edge_count(); ++k) {
        if (k == l.edge) continue;
        auto [i, j] = g.edges[k];
        int a = c.block_of[i], b = c.block_of[j];
        int ck = c.graph.edge_index(a, b);
        // source of the contracted edge under rho
        int src = (l.rho >> ck & 1) ? std::max(a, b) : std::min(a, b);
        if (src != c.block_of[i]) base |= OrientBits{1} << k;
    }
    OrientBits o0 = base;                                    // edge as i -> j
    OrientBits o1 = base | (OrientBits{1} << l.edge);        // edge as j -> i
    assert(is_acyclic(g, o0) && is_acyclic(g, o1));
    return {o0, o1};
}

std::vector<Flat2> rank2_flats(const Graph& g) {
    auto tris = triangles(g);
    std::vector<Flat2> flats;
    flats.reserve(tris.size());
    for (auto t : tris) flats.push_back({true, t, {-1, -1}});

    // mark edge pairs living in a common triangle; every other pair is closed
    int m = g.edge_count();
    std::vector<bool> co_tri(static_cast<size_t>(m) * m, false);
    for (auto [i, j, k] : tris) {
        int a = g.edge_index(i, j), b = g.edge_index(i, k), c = g.edge_index(j, k);
        for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}})
            co_tri[static_cast<size_t>(std::min(x, y)) * m + std::max(x, y)] = true;
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!co_tri[static_cast<size_t>(a) * m + b])
                flats.push_back({false, {-1, -1, -1}, {a, b}});
    return flats;
}

VertexPartition flat_blocks(const Graph& g, const Flat2& f) {
    if (f.is_triangle) return {{{f.tri[0], f.tri[1], f.tri[2]}}};
    auto [i1, j1] = g.edges[f.pair[0]];
    auto [i2, j2] = g.edges[f.pair[1]];
    std::vector<int> a{i1, j1}, b{i2, j2};
    if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) {
        std::vector<int> merged{i1, j1, i2, j2};
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        return {{merged}};
    }
    return {{a, b}};
}

std::vector<TwoFaceLabel> two_faces(const LabelSpace& ls) {
    const Graph& g = ls.graph();
    std::vector<TwoFaceLabel> out;
    for (const Flat2& f : rank2_flats(g)) {
        Contraction c = contract(g, flat_blocks(g, f));
        for (OrientBits rho : enumerate_acyclic(c.graph)) out.push_back({f, rho});
    }
    return out;
}

namespace {

// Lift rho from G/F to G/e for a flat edge e: all edges of G/e that survive
// in G/F take rho's direction; exactly one edge of G/e collapses in G/F (the
// image of the rest of the flat) and stays free. Returns the free edge index
// of G/e and the fixed bits.
struct Lift {
    int free_edge;
    OrientBits fixed;
};

Lift lift_face_orientation(const LabelSpace& ls, const Contraction& cf, OrientBits rho,
                           int edge) {
    const Graph& g = ls.graph();
    const Contraction& ce = ls.edge_contraction(edge);
    // representative g-vertex for each vertex of G/e
    std::vector<int> rep(ce.graph.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (rep[ce.block_of[v]] == -1) rep[ce.block_of[v]] = v;

    Lift lift{-1, 0};
    for (int k = 0; k < ce.graph.edge_count(); ++k) {
        auto [a, b] = ce.graph.edges[k];
        int fa = cf.block_of[rep[a]], fb = cf.block_of[rep[b]];
        if (fa == fb) {
            assert(lift.free_edge == -1);
            lift.free_edge = k;
            continue;
        }
        int ck = cf.graph.edge_index(fa, fb);
        int src = (rho >> ck & 1) ? std::max(fa, fb) : std::min(fa, fb);
        bool a_is_source = (src == fa);
        if (!a_is_source) lift.fixed |= OrientBits{1} << k;
    }
    assert(lift.free_edge != -1);
    return lift;
}

}  // namespace

ParallelogramSides parallelogram_sides(const LabelSpace& ls, const TwoFaceLabel& f) {
    if (f.flat.is_triangle)
        throw std::invalid_argument("parallelogram_sides called on a hexagon face");
    const Graph& g = ls.graph();
    Contraction cf = contract(g, flat_blocks(g, f.flat));
    ParallelogramSides out;
    for (int s = 0; s < 2; ++s) {
        int e = f.flat.pair[s];
        Lift lift = lift_face_orientation(ls, cf, f.rho, e);
        OrientBits s0 = lift.fixed;
        OrientBits s1 = lift.fixed | (OrientBits{1} << lift.free_edge);
        assert(is_acyclic(ls.edge_contraction(e).graph, s0));
        assert(is_acyclic(ls.edge_contraction(e).graph, s1));
        out.pairs[s] = {EdgeLabel{e, s0}, EdgeLabel{e, s1}};
    }
    return out;
}

HexSides hexagon_sides(const LabelSpace& ls, const TwoFaceLabel& f) {
    if (!f.flat.is_triangle)
        throw std::invalid_argument("hexagon_sides called on a parallelogram face");
    const Graph& g = ls.graph();
    auto [u, v, w] = f.flat.tri;
    Contraction cf = contract(g, flat_blocks(g, f.flat));
    HexSides out;
    std::array<std::pair<std::pair<int, int>, int>, 3> sides = {
        std::pair{std::pair{u, v}, w}, {std::pair{u, w}, v}, {std::pair{v, w}, u}};
    std::sort(sides.begin(), sides.end());
    for (int s = 0; s < 3; ++s) {
        auto [ij, third] = sides[s];
        int e = g.edge_index(ij.first, ij.second);
        out.tri_edges[s] = e;
        const Contraction& ce = ls.edge_contraction(e);
        Lift lift = lift_face_orientation(ls, cf, f.rho, e);
        // free edge joins the contracted block A and the third vertex's block
        int A = ce.block_of[ij.first];
        int W = ce.block_of[third];
        assert(ce.graph.edges[lift.free_edge] == std::make_pair(std::min(A, W), std::max(A, W)));
        OrientBits toward_bit = (W < A) ? 0 : 1;  // source is the smaller endpoint
        OrientBits toward = lift.fixed | (toward_bit << lift.free_edge);
        OrientBits away = lift.fixed | ((toward_bit ^ 1) << lift.free_edge);
        assert(is_acyclic(ce.graph, toward) && is_acyclic(ce.graph, away));
        out.toward[s] = {e, toward};
        out.away[s] = {e, away};
    }
    return out;
}

}  // namespace zonocone
