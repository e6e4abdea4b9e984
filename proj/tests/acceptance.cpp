// Acceptance suite: one line per criterion, exact checks throughout.
// Exit code 0 only when every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zonocone/experiments.hpp"

using namespace zonocone;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> run;
};

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
Graph chain3() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}); }
// six vertices, K4-free, three triangles in a chain plus a pendant edge
Graph sixv() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
}

std::set<IVec> summand_ray_set(const DefCone& dc) {
    std::set<IVec> out;
    const Graph& g = dc.labels.graph();
    for (int e = 0; e < g.edge_count(); ++e)
        out.insert(primitive_direction(summand_lengths(dc.labels, SummandKind::segment, e).values));
    for (int t = 0; t < static_cast<int>(dc.labels.triangle_list().size()); ++t) {
        out.insert(
            primitive_direction(summand_lengths(dc.labels, SummandKind::plus_triangle, t).values));
        out.insert(
            primitive_direction(summand_lengths(dc.labels, SummandKind::minus_triangle, t).values));
    }
    return out;
}

bool rays_are_edge_indicators(const DefCone& dc, const RayList& rays) {
    std::set<IVec> expected;
    const Graph& g = dc.labels.graph();
    for (int e = 0; e < g.edge_count(); ++e)
        expected.insert(primitive_direction(summand_lengths(dc.labels, SummandKind::segment, e).values));
    return std::set<IVec>(rays.rays.begin(), rays.rays.end()) == expected;
}

bool criterion1(std::string& detail) {
    DefCone dc = build_defcone(complete_graph(3));
    RayList rays = defcone_rays(dc);
    int dim = cone_dimension(rays);
    int facets = facet_count(dc.cone, rays);
    bool rays_ok = std::set<IVec>(rays.rays.begin(), rays.rays.end()) == summand_ray_set(dc);
    auto fv = f_vector(dc.cone, rays);
    std::ostringstream os;
    os << "dim " << dim << ", facets " << facets << ", rays " << rays.rays.size();
    detail = os.str();
    return dim == 4 && facets == 6 && rays.rays.size() == 5 && rays_ok &&
           fv == std::vector<long>{5, 9, 6, 1};
}

bool criterion2(std::string& detail) {
    DefCone dc = build_defcone(path_graph(3));
    RayList rays = defcone_rays(dc);
    int dim = cone_dimension(rays);
    detail = "dim " + std::to_string(dim) + ", rays " + std::to_string(rays.rays.size());
    return dim == 2 && rays.rays.size() == 2 && rays_are_edge_indicators(dc, rays);
}

bool criterion3(std::string& detail) {
    for (const Graph& g : {path_graph(5), cycle_graph(4), cycle_graph(5), k23()}) {
        DefCone dc = build_defcone(g);
        RayList rays = defcone_rays(dc);
        int dim = cone_dimension(rays);
        int facets = facet_count(dc.cone, rays);
        if (dim != g.edge_count() || facets != g.edge_count() ||
            !rays_are_edge_indicators(dc, rays)) {
            detail = "failed on a graph with |E| = " + std::to_string(g.edge_count());
            return false;
        }
    }
    detail = "path(5), cycle(4), cycle(5), K_{2,3} all simplicial on edge indicators";
    return true;
}

bool criterion4(std::string& detail) {
    DefCone dc = build_defcone(bi_triangle_graph());
    RayList rays = defcone_rays(dc);
    int dim = cone_dimension(rays);
    int facets = facet_count(dc.cone, rays);
    bool rays_ok = std::set<IVec>(rays.rays.begin(), rays.rays.end()) == summand_ray_set(dc);
    TwoFaceCount tf = two_face_count(dc, rays);
    auto fv = f_vector(dc.cone, rays);
    std::ostringstream os;
    os << "dim " << dim << ", facets " << facets << ", rays " << rays.rays.size()
       << ", 2-faces " << tf.lattice_count;
    detail = os.str();
    return dim == 7 && facets == 12 && rays.rays.size() == 9 && rays_ok &&
           tf.lattice_count == 34 && tf.formula == 34 &&
           fv == std::vector<long>{9, 34, 68, 75, 44, 12, 1};
}

bool criterion5(std::string& detail) {
    int checked = 0;
    for (const Graph& g : {complete_graph(3), path_graph(3), path_graph(5), cycle_graph(4),
                           cycle_graph(5), k23(), bi_triangle_graph(), complete_graph(4),
                           cyc3_graph(5)}) {
        DefCone dc = build_defcone(g);
        FormulaReport rep = validate_formulas(dc, defcone_rays(dc));
        if (!rep.dim_ok || !rep.facets_ok) {
            std::ostringstream os;
            os << "mismatch on graph " << checked << ": dim " << rep.dim << " vs omega "
               << rep.omega << ", facets " << rep.facets << " vs " << rep.facet_formula;
            detail = os.str();
            return false;
        }
        ++checked;
    }
    detail = "dim = Omega and facet formula on " + std::to_string(checked) + " graphs";
    return true;
}

bool criterion6(std::string& detail) {
    std::ostringstream os;
    for (const Graph& g : {bi_triangle_graph(), chain3(), sixv()}) {
        TriangulationReport rep = verify_triangulation(g);
        os << rep.ray_count << "=" << rep.expected_ray_count << " ";
        if (!rep.ok) {
            detail = "triangulation mismatch";
            return false;
        }
    }
    detail = "ray counts " + os.str() + "(|E| + 2|T| exact)";
    return true;
}

bool criterion7(std::string& detail) {
    std::mt19937 rng(1789);
    std::uniform_int_distribution<int> num(0, 9), den(1, 6), coin(0, 1);
    long samples = 0;
    for (const Graph& g : {complete_graph(3), bi_triangle_graph(), chain3(), sixv()}) {
        DefCone dc = build_defcone(g);
        int ne = g.edge_count();
        int nt = static_cast<int>(dc.labels.triangle_list().size());
        for (int trial = 0; trial < 100; ++trial) {
            LengthVector l;
            l.values.assign(dc.labels.label_count(), Rat(0));
            std::vector<Rat> lam_e(ne), lam_t(nt);
            std::vector<int> sign_t(nt);
            for (int e = 0; e < ne; ++e) {
                lam_e[e] = make_rat(num(rng), den(rng));
                LengthVector s = summand_lengths(dc.labels, SummandKind::segment, e);
                for (int i = 0; i < dc.labels.label_count(); ++i)
                    l.values[i] += lam_e[e] * s.values[i];
            }
            for (int t = 0; t < nt; ++t) {
                lam_t[t] = make_rat(num(rng), den(rng));
                sign_t[t] = coin(rng) ? 1 : -1;
                LengthVector s = summand_lengths(
                    dc.labels,
                    sign_t[t] > 0 ? SummandKind::plus_triangle : SummandKind::minus_triangle, t);
                for (int i = 0; i < dc.labels.label_count(); ++i)
                    l.values[i] += lam_t[t] * s.values[i];
            }
            if (!is_deformation(dc, l)) {
                detail = "combination left the cone";
                return false;
            }
            Decomposition d = decompose(dc, l);
            for (int e = 0; e < ne; ++e)
                if (d.omega_edge[e] != lam_e[e]) {
                    detail = "segment coefficient not recovered";
                    return false;
                }
            for (int t = 0; t < nt; ++t)
                if (d.omega_tri[t] != sign_t[t] * lam_t[t]) {
                    detail = "triangle coefficient not recovered";
                    return false;
                }
            if (!reconstruction_holds(dc, l, d)) {
                detail = "reconstruction identity failed";
                return false;
            }
            ++samples;
        }
    }
    detail = std::to_string(samples) + " random decompositions recovered exactly";
    return true;
}

bool criterion8(std::string& detail) {
    std::ostringstream os;

    auto c4 = ray_dimension_census(cyc3_graph(4));
    os << "cyc3(4) " << census_line(c4);
    if (c4 != std::map<int, long>{{1, 6}, {2, 8}, {3, 23}}) {
        detail = os.str() + " (expected 1:6 2:8 3:23)";
        return false;
    }

    auto c5 = ray_dimension_census(cyc3_graph(5));
    os << "; cyc3(5) " << census_line(c5);
    if (c5 != std::map<int, long>{{1, 9}, {2, 14}, {3, 46}, {4, 96}}) {
        detail = os.str() + " (expected 1:9 2:14 3:46 4:96)";
        return false;
    }

    auto w5 = ray_dimension_census(wedge_k4_graph(5));
    os << "; wedge_k4(5) " << census_line(w5);
    if (w5.find(4) == w5.end() || w5[4] <= 0) {
        detail = os.str() + " (expected a dimension-4 ray)";
        return false;
    }

    auto w6 = ray_dimension_census(wedge_k4_graph(6));
    os << "; wedge_k4(6) " << census_line(w6);
    if (w6.find(5) != w6.end()) {
        detail = os.str() + " (expected no dimension-5 ray)";
        return false;
    }

    detail = os.str();
    return true;
}

bool criterion9(std::string& detail) {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> amb(4, 10), neq(1, 4), entry(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        int n = amb(rng), m = neq(rng);
        ConeH c;
        c.ambient = n;
        for (int r = 0; r < m; ++r) {
            SparseRow row;
            for (int i = 0; i < n; ++i) {
                int v = entry(rng);
                if (v != 0) row.terms.emplace_back(i, Rat(v));
            }
            c.equalities.push_back(std::move(row));
        }
        RayList dd = extreme_rays(c);
        std::vector<IVec> brute = oracle::brute_force_extreme_rays(c);
        if (dd.rays != brute) {
            detail = "mismatch on random cone " + std::to_string(trial);
            return false;
        }
    }
    detail = "20 random cones match the support-pattern oracle";
    return true;
}

bool criterion10(std::string& detail) {
    std::vector<Graph> graphs = {complete_graph(3), path_graph(3),  path_graph(5),
                                 cycle_graph(4),    cycle_graph(5), k23(),
                                 bi_triangle_graph(), chain3(),     sixv(),
                                 complete_graph(4), cyc3_graph(5)};
    long hulls = 0;
    for (const Graph& g : graphs) {
        DefCone dc = build_defcone(g);

        // edges of every ray polytope are dilates of e_i - e_j
        for (const IVec& ray : defcone_rays(dc).rays) {
            DeformedPolytope p = build_polytope(dc.labels, length_vector_from_ray(ray));
            if (p.vertex_set.size() > 40) continue;   // hull oracle scope
            for (auto [a, b] : oracle::hull_edges(p.vertex_set)) {
                QVec d(g.n);
                for (int v = 0; v < g.n; ++v) d[v] = p.vertex_set[b][v] - p.vertex_set[a][v];
                IVec prim = primitive_direction(d);
                bool matches = false;
                for (auto [i, j] : g.edges) {
                    IVec dir(g.n, Int(0)), neg(g.n, Int(0));
                    dir[i] = 1;
                    dir[j] = -1;
                    neg[i] = -1;
                    neg[j] = 1;
                    if (prim == dir || prim == neg) { matches = true; break; }
                }
                if (!matches) {
                    detail = "hull edge in a non-graphical direction";
                    return false;
                }
                ++hulls;
            }
        }

        // Q_{l(Z_G)} matches the in-degree vertices up to one translation
        DeformedPolytope z =
            build_polytope(dc.labels, summand_lengths(dc.labels, SummandKind::zonotope));
        QVec shift;
        for (std::size_t i = 0; i < z.orientations.size(); ++i) {
            auto iv = vertex_point(g, z.orientations[i]);
            QVec diff(g.n);
            for (int v = 0; v < g.n; ++v) diff[v] = z.positions[i][v] - iv[v];
            if (i == 0) shift = diff;
            if (diff != shift) {
                detail = "zonotope vertices do not match the in-degree vectors";
                return false;
            }
        }
        if (z.vertex_set.size() != z.orientations.size()) {
            detail = "zonotope vertex count mismatch";
            return false;
        }
    }
    detail = std::to_string(hulls) + " hull edges checked, all graphical directions";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "K3 cone: dim 4, 6 facets, rays {segments, +-triangle}, f-vector (5,9,6,1)", criterion1},
        {2, "path(3): dim 2, simplicial, edge-indicator rays", criterion2},
        {3, "triangle-free suite: dim = facets = |E|, edge-indicator rays", criterion3},
        {4, "bi-triangle: dim 7, 12 facets, 9 summand rays, 34 2-faces, full f-vector", criterion4},
        {5, "dimension and facet formulas on all suite graphs plus K4, cyc3(5)", criterion5},
        {6, "K4-free triangulation on bi-triangle, triangle chain, 6-vertex graph", criterion6},
        {7, "decomposition round-trip, 100 random points per K4-free graph", criterion7},
        {8, "ray-dimension censuses: cyc3(4), cyc3(5), wedge_k4(5), wedge_k4(6)", criterion8},
        {9, "double description matches the support-pattern oracle", criterion9},
        {10, "ray polytopes have graphical edges; zonotope vertices are in-degrees", criterion10},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %2d  %s [%s] (%.2fs)\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                    detail.c_str(), secs);
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
