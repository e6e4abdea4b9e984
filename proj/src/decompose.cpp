#include "zonocone/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zonocone {

namespace {

// Signed step of triangle t: l(toward) - l(away), checked constant over all
// sides of all hexagonal faces of t. No validation of l here.
Rat signed_step(const DefCone& dc, const LengthVector& l, int tri_index) {
    const auto& tri = dc.labels.triangle_list().at(tri_index);
    bool have = false;
    Rat d;
    for (const TwoFaceLabel& f : dc.faces) {
        if (!f.flat.is_triangle || f.flat.tri != tri) continue;
        HexSides hs = hexagon_sides(dc.labels, f);
        for (int s = 0; s < 3; ++s) {
            Rat v = l.values[dc.labels.index_of(hs.toward[s])] -
                    l.values[dc.labels.index_of(hs.away[s])];
            if (!have) {
                d = v;
                have = true;
            } else if (d != v) {
                throw std::logic_error("hexagon step differs across sides of one triangle");
            }
        }
    }
    if (!have) throw std::logic_error("triangle has no hexagonal face");
    return d;
}

void require_k4_free_deformation(const DefCone& dc, const LengthVector& l) {
    if (!is_k4_free(dc.labels.graph()))
        throw std::invalid_argument("graph is not K4-free");
    if (!is_deformation(dc, l))
        throw std::invalid_argument("length vector is not a deformation");
}

}  // namespace

Rat step_delta(const DefCone& dc, const LengthVector& l, int tri_index) {
    require_k4_free_deformation(dc, l);
    return abs(signed_step(dc, l, tri_index));
}

Decomposition decompose(const DefCone& dc, const LengthVector& l) {
    require_k4_free_deformation(dc, l);
    const LabelSpace& ls = dc.labels;
    Decomposition out;
    int nt = static_cast<int>(ls.triangle_list().size());
    out.omega_tri.reserve(nt);
    for (int t = 0; t < nt; ++t) out.omega_tri.push_back(signed_step(dc, l, t));
    int ne = ls.graph().edge_count();
    out.omega_edge.assign(ne, Rat(0));
    for (int e = 0; e < ne; ++e) {
        bool have = false;
        for (OrientBits rho : ls.edge_orientations(e)) {
            const Rat& v = l.values[ls.index_of(e, rho)];
            if (!have || v < out.omega_edge[e]) {
                out.omega_edge[e] = v;
                have = true;
            }
        }
    }
    if (!reconstruction_holds(dc, l, out))
        throw std::logic_error("decomposition failed to reconstruct the input lengths");
    return out;
}

bool reconstruction_holds(const DefCone& dc, const LengthVector& l, const Decomposition& d) {
    const LabelSpace& ls = dc.labels;
    const Graph& g = ls.graph();
    const auto& tris = ls.triangle_list();
    for (int li = 0; li < ls.label_count(); ++li) {
        const EdgeLabel& lab = ls.labels()[li];
        auto [i, j] = g.edges[lab.edge];
        Rat expect = d.omega_edge[lab.edge];
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            auto [a, b, c] = tris[t];
            bool in_tri = (i == a || i == b || i == c) && (j == a || j == b || j == c);
            if (!in_tri) continue;
            int s = sgn(d.omega_tri[t]);
            if (s == 0) continue;
            bool toward = label_is_toward(ls, lab, t);
            if ((s > 0 && toward) || (s < 0 && !toward)) expect += abs(d.omega_tri[t]);
        }
        if (l.values[li] != expect) return false;
    }
    return true;
}

std::vector<int> locate_simplex(const DefCone& dc, const LengthVector& l) {
    Decomposition d = decompose(dc, l);
    std::vector<int> eps;
    eps.reserve(d.omega_tri.size());
    for (const Rat& w : d.omega_tri) eps.push_back(sgn(w));
    return eps;
}

std::optional<Decomposition> decompose_with_pattern(const DefCone& dc, const LengthVector& l,
                                                    const std::vector<int>& eps) {
    require_k4_free_deformation(dc, l);
    const LabelSpace& ls = dc.labels;
    const Graph& g = ls.graph();
    const auto& tris = ls.triangle_list();
    if (eps.size() != tris.size()) throw std::invalid_argument("pattern size mismatch");

    Decomposition out;
    out.omega_tri.reserve(tris.size());
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        if (eps[t] != 1 && eps[t] != -1) throw std::invalid_argument("pattern entries must be +-1");
        Rat d = signed_step(dc, l, t);
        if (sgn(d) != 0 && sgn(d) != eps[t]) return std::nullopt;   // step has the wrong sign
        out.omega_tri.push_back(d);
    }
    int ne = g.edge_count();
    out.omega_edge.assign(ne, Rat(0));
    for (int e = 0; e < ne; ++e) {
        auto [i, j] = g.edges[e];
        bool have = false;
        Rat w;
        for (OrientBits rho : ls.edge_orientations(e)) {
            Rat v = l.values[ls.index_of(e, rho)];
            EdgeLabel lab{e, rho};
            for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
                auto [a, b, c] = tris[t];
                bool in_tri = (i == a || i == b || i == c) && (j == a || j == b || j == c);
                if (!in_tri || sgn(out.omega_tri[t]) == 0) continue;
                bool toward = label_is_toward(ls, lab, t);
                if ((eps[t] > 0 && toward) || (eps[t] < 0 && !toward))
                    v -= abs(out.omega_tri[t]);
            }
            if (!have) {
                w = v;
                have = true;
            } else if (w != v) {
                return std::nullopt;   // no constant segment coefficient in this cell
            }
        }
        if (have && sgn(w) < 0) return std::nullopt;
        out.omega_edge[e] = have ? w : Rat(0);
    }
    return out;
}

TriangulationReport verify_triangulation(const Graph& g, const DDOptions& opt) {
    if (!is_k4_free(g)) throw std::invalid_argument("graph is not K4-free");
    DefCone dc = build_defcone(g);
    RayList rays = defcone_rays(dc, opt);
    TriangulationReport rep;
    long ne = g.edge_count();
    long nt = static_cast<long>(dc.labels.triangle_list().size());
    rep.ray_count = static_cast<long>(rays.rays.size());
    rep.expected_ray_count = ne + 2 * nt;
    rep.dim = cone_dimension(rays);
    rep.expected_dim = ne + nt;

    std::set<IVec> expected;
    for (int e = 0; e < g.edge_count(); ++e)
        expected.insert(
            primitive_direction(summand_lengths(dc.labels, SummandKind::segment, e).values));
    for (int t = 0; t < nt; ++t) {
        expected.insert(primitive_direction(
            summand_lengths(dc.labels, SummandKind::plus_triangle, t).values));
        expected.insert(primitive_direction(
            summand_lengths(dc.labels, SummandKind::minus_triangle, t).values));
    }
    std::set<IVec> got(rays.rays.begin(), rays.rays.end());
    rep.rays_match = (expected == got);
    rep.ok = rep.rays_match && rep.ray_count == rep.expected_ray_count &&
             rep.dim == rep.expected_dim;
    return rep;
}

nlohmann::ordered_json decomposition_json(const DefCone& dc, const LengthVector& l,
                                          const Decomposition& d) {
    const Graph& g = dc.labels.graph();
    nlohmann::ordered_json j;
    auto oe = nlohmann::ordered_json::object();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        oe[std::to_string(a) + "-" + std::to_string(b)] = to_string(d.omega_edge[e]);
    }
    j["omega_edge"] = std::move(oe);
    auto ot = nlohmann::ordered_json::object();
    auto epsj = nlohmann::ordered_json::object();
    const auto& tris = dc.labels.triangle_list();
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        auto [a, b, c] = tris[t];
        std::string key =
            std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(c);
        ot[key] = to_string(d.omega_tri[t]);
        epsj[key] = sgn(d.omega_tri[t]);
    }
    j["omega_tri"] = std::move(ot);
    j["epsilon"] = std::move(epsj);
    j["verified"] = reconstruction_holds(dc, l, d);
    return j;
}

}  // namespace zonocone
