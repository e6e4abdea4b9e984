#include "zonocone/deformation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace zonocone {

bool is_deformation(const DefCone& dc, const LengthVector& l) {
    if (static_cast<int>(l.values.size()) != dc.cone.ambient)
        throw std::invalid_argument("length vector does not match the label space");
    for (const Rat& v : l.values)
        if (sgn(v) < 0) return false;
    for (const SparseRow& row : dc.cone.equalities) {
        Rat s = 0;
        for (const auto& [col, coeff] : row.terms) s += coeff * l.values[col];
        if (sgn(s) != 0) return false;
    }
    return true;
}

DeformedPolytope build_polytope(const LabelSpace& ls, const LengthVector& l, int base) {
    const Graph& g = ls.graph();
    if (static_cast<int>(l.values.size()) != ls.label_count())
        throw std::invalid_argument("length vector does not match the label space");
    DeformedPolytope p;
    p.orientations = enumerate_acyclic(g);
    auto orient_index = [&](OrientBits o) {
        auto it = std::lower_bound(p.orientations.begin(), p.orientations.end(), o);
        return static_cast<int>(it - p.orientations.begin());
    };
    int count = static_cast<int>(p.orientations.size());
    p.positions.assign(count, {});
    std::vector<bool> done(count, false);
    std::deque<int> queue;
    p.positions[base].assign(g.n, Rat(0));
    done[base] = true;
    queue.push_back(base);
    while (!queue.empty()) {
        int oi = queue.front();
        queue.pop_front();
        OrientBits o = p.orientations[oi];
        for (auto [k, o2] : flip_neighbors(g, o)) {
            auto rho = induce_orientation(g, o, ls.edge_contraction(k));
            if (!rho)
                throw std::invalid_argument("flip across a non-contractible orientation");
            const Rat& len = l.values[ls.index_of(k, *rho)];
            auto [i, j] = g.edges[k];
            // flipping i->j into j->i moves the in-degree point by e_i - e_j
            QVec pos = p.positions[oi];
            if (o >> k & 1) {
                pos[i] -= len;
                pos[j] += len;
            } else {
                pos[i] += len;
                pos[j] -= len;
            }
            int ni = orient_index(o2);
            if (done[ni]) {
                if (p.positions[ni] != pos)
                    throw std::invalid_argument("length vector is not cycle-consistent");
            } else {
                p.positions[ni] = std::move(pos);
                done[ni] = true;
                queue.push_back(ni);
            }
        }
    }
    p.vertex_set = p.positions;
    std::sort(p.vertex_set.begin(), p.vertex_set.end());
    p.vertex_set.erase(std::unique(p.vertex_set.begin(), p.vertex_set.end()),
                       p.vertex_set.end());
    return p;
}

int polytope_dim(const DeformedPolytope& p) {
    if (p.vertex_set.size() <= 1) return 0;
    std::vector<IVec> diffs;
    diffs.reserve(p.vertex_set.size() - 1);
    const QVec& p0 = p.vertex_set.front();
    for (std::size_t i = 1; i < p.vertex_set.size(); ++i) {
        QVec d(p0.size());
        for (std::size_t c = 0; c < p0.size(); ++c) d[c] = p.vertex_set[i][c] - p0[c];
        diffs.push_back(primitive_direction(d));
    }
    return rank_int(diffs);
}

bool label_is_toward(const LabelSpace& ls, const EdgeLabel& l, int tri_index) {
    const Graph& g = ls.graph();
    auto [a, b, c] = ls.triangle_list().at(tri_index);
    auto [i, j] = g.edges[l.edge];
    int third = (i != a && j != a) ? a : (i != b && j != b) ? b : c;
    const Contraction& ce = ls.edge_contraction(l.edge);
    int A = ce.block_of[i];
    int W = ce.block_of[third];
    int fk = ce.graph.edge_index(A, W);
    OrientBits toward_bit = (W < A) ? 0 : 1;
    return (l.rho >> fk & 1) == toward_bit;
}

LengthVector summand_lengths(const LabelSpace& ls, SummandKind kind, int arg) {
    const Graph& g = ls.graph();
    LengthVector lv;
    lv.values.assign(ls.label_count(), Rat(0));
    switch (kind) {
        case SummandKind::zonotope:
            std::fill(lv.values.begin(), lv.values.end(), Rat(1));
            break;
        case SummandKind::segment: {
            if (arg < 0 || arg >= g.edge_count())
                throw std::invalid_argument("segment summand: edge not in graph");
            for (int li = 0; li < ls.label_count(); ++li)
                if (ls.labels()[li].edge == arg) lv.values[li] = 1;
            break;
        }
        case SummandKind::plus_triangle:
        case SummandKind::minus_triangle: {
            if (arg < 0 || arg >= static_cast<int>(ls.triangle_list().size()))
                throw std::invalid_argument("triangle summand: triangle not in graph");
            auto [a, b, c] = ls.triangle_list()[arg];
            bool want_toward = (kind == SummandKind::plus_triangle);
            for (int li = 0; li < ls.label_count(); ++li) {
                const EdgeLabel& l = ls.labels()[li];
                auto [i, j] = g.edges[l.edge];
                bool in_tri = (i == a || i == b || i == c) && (j == a || j == b || j == c);
                if (!in_tri) continue;
                if (label_is_toward(ls, l, arg) == want_toward) lv.values[li] = 1;
            }
            break;
        }
    }
    return lv;
}

nlohmann::ordered_json export_polytope_json(const DeformedPolytope& p) {
    nlohmann::ordered_json j;
    auto verts = nlohmann::ordered_json::array();
    for (const QVec& v : p.vertex_set) {
        std::vector<std::string> coords;
        coords.reserve(v.size());
        for (const Rat& x : v) coords.push_back(to_string(x));
        verts.push_back(std::move(coords));
    }
    j["vertices"] = std::move(verts);
    j["dim"] = polytope_dim(p);
    return j;
}

}  // namespace zonocone
