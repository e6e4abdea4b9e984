#include "zonocone/defcone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zonocone {

LengthVector length_vector_from_ray(const IVec& ray) {
    LengthVector lv;
    lv.values.reserve(ray.size());
    for (const Int& x : ray) lv.values.emplace_back(x);
    return lv;
}

static SparseRow make_row(std::initializer_list<std::pair<int, int>> terms) {
    std::map<int, Rat> acc;
    for (auto [col, coeff] : terms) acc[col] += coeff;
    SparseRow row;
    for (auto& [col, v] : acc)
        if (sgn(v) != 0) row.terms.emplace_back(col, v);
    return row;
}

DefCone build_defcone(const Graph& g, std::uint64_t max_patterns) {
    DefCone dc{LabelSpace(g, max_patterns), {}, {}};
    dc.faces = two_faces(dc.labels);
    dc.cone.ambient = dc.labels.label_count();
    for (const TwoFaceLabel& f : dc.faces) {
        if (f.flat.is_triangle) {
            HexSides hs = hexagon_sides(dc.labels, f);
            std::array<int, 3> tow, awy;
            for (int s = 0; s < 3; ++s) {
                tow[s] = dc.labels.index_of(hs.toward[s]);
                awy[s] = dc.labels.index_of(hs.away[s]);
            }
            // step equalities d_a = d_b and d_b = d_c, d = l(toward) - l(away)
            dc.cone.equalities.push_back(
                make_row({{tow[0], 1}, {awy[0], -1}, {tow[1], -1}, {awy[1], 1}}));
            dc.cone.equalities.push_back(
                make_row({{tow[1], 1}, {awy[1], -1}, {tow[2], -1}, {awy[2], 1}}));
        } else {
            ParallelogramSides ps = parallelogram_sides(dc.labels, f);
            for (const auto& pr : ps.pairs)
                dc.cone.equalities.push_back(
                    make_row({{dc.labels.index_of(pr[0]), 1}, {dc.labels.index_of(pr[1]), -1}}));
        }
    }
    return dc;
}

FormulaReport validate_formulas(const DefCone& dc, const RayList& rays) {
    FormulaReport rep;
    rep.dim = cone_dimension(rays);
    rep.omega = clique_count(dc.labels.graph());
    rep.facets = facet_count(dc.cone, rays);
    const auto& tris = dc.labels.triangle_list();
    const Graph& g = dc.labels.graph();
    rep.facet_formula = 0;
    for (auto [i, j] : g.edges) {
        int in_tris = 0;
        for (auto [a, b, c] : tris) {
            bool has_i = (i == a || i == b || i == c);
            bool has_j = (j == a || j == b || j == c);
            if (has_i && has_j) ++in_tris;
        }
        rep.facet_formula += 1L << in_tris;
    }
    rep.dim_ok = (rep.dim == rep.omega);
    rep.facets_ok = (rep.facets == rep.facet_formula);
    return rep;
}

RayList defcone_rays(const DefCone& dc, const DDOptions& opt) {
    return extreme_rays(dc.cone, opt);
}

TwoFaceCount two_face_count(const DefCone& dc, const RayList& rays, int max_rays) {
    const Graph& g = dc.labels.graph();
    if (!is_k4_free(g)) throw std::invalid_argument("two_face_count requires a K4-free graph");
    std::vector<long> fv = f_vector(dc.cone, rays, max_rays);
    TwoFaceCount out;
    out.lattice_count = fv.size() >= 2 ? fv[1] : 0;
    long f1 = static_cast<long>(g.edge_count()) +
              2 * static_cast<long>(dc.labels.triangle_list().size());
    out.formula = f1 * (f1 - 1) / 2 - static_cast<long>(dc.labels.triangle_list().size());
    return out;
}

nlohmann::ordered_json export_cone_json(const DefCone& dc) {
    nlohmann::ordered_json j;
    const Graph& g = dc.labels.graph();
    j["graph"] = {{"n", g.n}, {"edges", g.edges}};
    auto labels = nlohmann::ordered_json::array();
    for (const EdgeLabel& l : dc.labels.labels()) {
        auto [i, k] = g.edges[l.edge];
        labels.push_back({{i, k}, l.rho});
    }
    j["labels"] = std::move(labels);
    auto eqs = nlohmann::ordered_json::array();
    for (const SparseRow& row : dc.cone.equalities) {
        std::vector<std::string> dense(dc.cone.ambient, "0");
        for (const auto& [col, v] : row.terms) dense[col] = to_string(v);
        eqs.push_back(dense);
    }
    j["equalities"] = std::move(eqs);
    return j;
}

}  // namespace zonocone
