// zonocone: deformation cones of graphical zonotopes, exactly.
//
// Exit codes: 0 success, 1 failed validation, 2 invalid input,
// 3 effort-cap refusal.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "zonocone/experiments.hpp"

using namespace zonocone;
using nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    int threads = 0;
    std::uint64_t max_orientations = std::uint64_t{1} << 24;
    std::size_t max_rays = std::size_t{1} << 20;
    int fvector_cap = 64;
    bool stretch = false;
};

DDOptions dd_options(const Options& o) {
    DDOptions dd;
    dd.max_rays = o.max_rays;
    dd.threads = o.threads;
    return dd;
}

Graph load_graph(const std::string& spec) {
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        if (!in) throw std::invalid_argument("cannot open graph file: " + spec);
        return parse_graph_text(in);
    }
    return graph_from_name(spec);
}

std::string edge_name(const Graph& g, int e) {
    auto [i, j] = g.edges[e];
    return "e(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string tri_name(const std::array<int, 3>& t) {
    return "t(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ")";
}

// identify a primitive ray as one of the named summands, when it is one
std::optional<std::string> identify_ray(const DefCone& dc, const IVec& ray) {
    const Graph& g = dc.labels.graph();
    for (int e = 0; e < g.edge_count(); ++e)
        if (ray == primitive_direction(summand_lengths(dc.labels, SummandKind::segment, e).values))
            return "segment " + edge_name(g, e);
    for (int t = 0; t < static_cast<int>(dc.labels.triangle_list().size()); ++t) {
        if (ray ==
            primitive_direction(summand_lengths(dc.labels, SummandKind::plus_triangle, t).values))
            return "+triangle " + tri_name(dc.labels.triangle_list()[t]);
        if (ray ==
            primitive_direction(summand_lengths(dc.labels, SummandKind::minus_triangle, t).values))
            return "-triangle " + tri_name(dc.labels.triangle_list()[t]);
    }
    return std::nullopt;
}

// ---- length-vector input: JSON array, JSON file, or summand expression ----

LengthVector lengths_from_json(const LabelSpace& ls, const nlohmann::json& arr) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != ls.label_count())
        throw std::invalid_argument("lengths array must have one entry per Edge label (" +
                                    std::to_string(ls.label_count()) + ")");
    LengthVector l;
    l.values.reserve(arr.size());
    for (const auto& v : arr) {
        if (v.is_string())
            l.values.push_back(rat_from_string(v.get<std::string>()));
        else if (v.is_number_integer())
            l.values.push_back(Rat(v.get<long>()));
        else
            throw std::invalid_argument("lengths entries must be integers or rational strings");
    }
    return l;
}

// expr := [sign] term (sign term)*; term := [coeff '*'] atom
// coeff := INT ['/' INT]; atom := e(i,j) | t(i,j,k) | Z
LengthVector lengths_from_expression(const LabelSpace& ls, const std::string& text) {
    LengthVector out;
    out.values.assign(ls.label_count(), Rat(0));
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(text[pos])) ++pos; };
    auto parse_int = [&]() -> long {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit(text[pos])) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in lengths expression");
        return std::stol(text.substr(start, pos - start));
    };
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between summands");
        }
        first = false;
        skip_ws();
        Rat coeff(1);
        if (pos < text.size() && (std::isdigit(text[pos]))) {
            long num = parse_int();
            long den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = parse_int();
            }
            coeff = make_rat(num, den);
            skip_ws();
            if (pos >= text.size() || text[pos] != '*')
                throw std::invalid_argument("expected '*' after coefficient");
            ++pos;
            skip_ws();
        }
        coeff *= sign;
        if (pos >= text.size()) throw std::invalid_argument("dangling coefficient");
        char atom = text[pos];
        LengthVector part;
        if (atom == 'Z') {
            ++pos;
            part = summand_lengths(ls, SummandKind::zonotope);
        } else if (atom == 'e' || atom == 't') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '(')
                throw std::invalid_argument("expected '(' after summand kind");
            ++pos;
            std::vector<long> ids;
            while (true) {
                ids.push_back(parse_int());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
                break;
            }
            if (pos >= text.size() || text[pos] != ')')
                throw std::invalid_argument("expected ')' in summand");
            ++pos;
            if (atom == 'e') {
                if (ids.size() != 2) throw std::invalid_argument("e(i,j) needs two vertices");
                int e = ls.graph().edge_index(static_cast<int>(ids[0]), static_cast<int>(ids[1]));
                if (e < 0) throw std::invalid_argument("no such edge in the graph");
                part = summand_lengths(ls, SummandKind::segment, e);
            } else {
                if (ids.size() != 3) throw std::invalid_argument("t(i,j,k) needs three vertices");
                std::array<int, 3> t = {static_cast<int>(ids[0]), static_cast<int>(ids[1]),
                                        static_cast<int>(ids[2])};
                std::sort(t.begin(), t.end());
                const auto& tris = ls.triangle_list();
                auto it = std::find(tris.begin(), tris.end(), t);
                if (it == tris.end()) throw std::invalid_argument("no such triangle in the graph");
                int ti = static_cast<int>(it - tris.begin());
                // a negative coefficient selects the reflected triangle
                part = summand_lengths(
                    ls, sgn(coeff) >= 0 ? SummandKind::plus_triangle : SummandKind::minus_triangle,
                    ti);
                coeff = abs(coeff);
            }
        } else {
            throw std::invalid_argument(std::string("unknown summand kind '") + atom + "'");
        }
        for (int i = 0; i < ls.label_count(); ++i) out.values[i] += coeff * part.values[i];
        skip_ws();
    }
    return out;
}

LengthVector parse_lengths(const LabelSpace& ls, const std::string& arg) {
    if (!arg.empty() && arg.front() == '[')
        return lengths_from_json(ls, nlohmann::json::parse(arg));
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        nlohmann::json j;
        in >> j;
        return lengths_from_json(ls, j);
    }
    return lengths_from_expression(ls, arg);
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------- commands

int cmd_info(const Options& opt, const std::string& gspec) {
    Graph g = load_graph(gspec);
    long tri = static_cast<long>(triangles(g).size());
    long omega = clique_count(g);
    ordered_json j{{"n", g.n},
                   {"edges", g.edge_count()},
                   {"triangles", tri},
                   {"omega", omega},
                   {"k4_free", is_k4_free(g)},
                   {"triangle_free", is_triangle_free(g)}};
    std::ostringstream os;
    os << "n " << g.n << "\nedges " << g.edge_count() << "\ntriangles " << tri << "\nomega "
       << omega << "\nk4_free " << (is_k4_free(g) ? "true" : "false") << "\ntriangle_free "
       << (is_triangle_free(g) ? "true" : "false") << "\n";
    emit(opt, j, os.str());
    return 0;
}

int cmd_cone(const Options& opt, const std::string& gspec) {
    Graph g = load_graph(gspec);
    DefCone dc = build_defcone(g, opt.max_orientations);
    RayList rays = defcone_rays(dc, dd_options(opt));
    FormulaReport rep = validate_formulas(dc, rays);
    ordered_json j{{"ambient", dc.cone.ambient}, {"dim", rep.dim},
                   {"omega", rep.omega},         {"facets", rep.facets},
                   {"facet_formula", rep.facet_formula}, {"dim_ok", rep.dim_ok},
                   {"facets_ok", rep.facets_ok}};
    j["cone"] = export_cone_json(dc);
    std::ostringstream os;
    os << "ambient " << dc.cone.ambient << "\ndim " << rep.dim << "\nomega " << rep.omega
       << "\nfacets " << rep.facets << "\nfacet_formula " << rep.facet_formula << "\ndim_ok "
       << (rep.dim_ok ? "true" : "false") << "\nfacets_ok " << (rep.facets_ok ? "true" : "false")
       << "\n";
    emit(opt, j, os.str());
    return (rep.dim_ok && rep.facets_ok) ? 0 : 1;
}

int cmd_rays(const Options& opt, const std::string& gspec) {
    Graph g = load_graph(gspec);
    DefCone dc = build_defcone(g, opt.max_orientations);
    RayList rays = defcone_rays(dc, dd_options(opt));
    bool k4free = is_k4_free(g);
    ordered_json jr = ordered_json::array();
    std::ostringstream os;
    for (const IVec& ray : rays.rays) {
        ordered_json entry;
        auto vec = ordered_json::array();
        for (std::size_t i = 0; i < ray.size(); ++i) {
            vec.push_back(ray[i].get_str());
            os << (i ? " " : "") << ray[i].get_str();
        }
        entry["vector"] = std::move(vec);
        std::optional<std::string> name;
        if (k4free) name = identify_ray(dc, ray);
        if (name) {
            entry["summand"] = *name;
            os << "   # " << *name;
        } else {
            entry["summand"] = nullptr;
        }
        os << "\n";
        jr.push_back(std::move(entry));
    }
    ordered_json j{{"count", rays.rays.size()}, {"rays", std::move(jr)}};
    emit(opt, j, os.str());
    return 0;
}

int cmd_fvector(const Options& opt, const std::string& gspec) {
    Graph g = load_graph(gspec);
    DefCone dc = build_defcone(g, opt.max_orientations);
    RayList rays = defcone_rays(dc, dd_options(opt));
    std::vector<long> fv = f_vector(dc.cone, rays, opt.fvector_cap);
    std::ostringstream os;
    for (std::size_t i = 0; i < fv.size(); ++i) os << (i ? " " : "") << fv[i];
    os << "\n";
    emit(opt, {{"f_vector", fv}}, os.str());
    return 0;
}

int cmd_decompose(const Options& opt, const std::string& gspec, const std::string& lengths) {
    Graph g = load_graph(gspec);
    DefCone dc = build_defcone(g, opt.max_orientations);
    LengthVector l = parse_lengths(dc.labels, lengths);
    if (!is_k4_free(g)) throw std::invalid_argument("decompose requires a K4-free graph");
    if (!is_deformation(dc, l))
        throw std::invalid_argument("length vector is not a point of the deformation cone");
    Decomposition d = decompose(dc, l);
    ordered_json j = decomposition_json(dc, l, d);
    std::ostringstream os;
    for (auto& [k, v] : j["omega_edge"].items())
        os << "omega_edge " << k << " = " << v.get<std::string>() << "\n";
    for (auto& [k, v] : j["omega_tri"].items())
        os << "omega_tri " << k << " = " << v.get<std::string>() << "\n";
    for (auto& [k, v] : j["epsilon"].items()) os << "epsilon " << k << " = " << v << "\n";
    os << "verified " << (j["verified"].get<bool>() ? "true" : "false") << "\n";
    emit(opt, j, os.str());
    return j["verified"].get<bool>() ? 0 : 1;
}

int cmd_census(const Options& opt, const std::string& gspec) {
    Graph g = load_graph(gspec);
    CensusOptions copt;
    copt.dd = dd_options(opt);
    copt.max_patterns = opt.max_orientations;
    copt.threads = opt.threads;
    auto hist = ray_dimension_census(g, copt);
    ordered_json jc = ordered_json::object();
    for (auto [d, c] : hist) jc[std::to_string(d)] = c;
    emit(opt, {{"census", std::move(jc)}}, census_line(hist) + "\n");
    return 0;
}

int cmd_table(const Options& opt, const std::string& family, int n_max) {
    if (family != "cyc3") throw std::invalid_argument("table supports the cyc3 family");
    if (n_max > 5 && !opt.stretch)
        throw effort_cap_error("cyc3 censuses beyond n = 5 sit behind --stretch");
    CensusOptions copt;
    copt.dd = dd_options(opt);
    copt.max_patterns = opt.max_orientations;
    copt.threads = opt.threads;
    auto rows = census_formula_check(4, n_max, copt);
    std::vector<std::pair<int, std::map<int, long>>> table;
    ordered_json jr = ordered_json::array();
    bool all_ok = true;
    for (const auto& row : rows) {
        table.emplace_back(row.n, row.census);
        ordered_json jc = ordered_json::object();
        for (auto [d, c] : row.census) jc[std::to_string(d)] = c;
        jr.push_back({{"n", row.n}, {"census", std::move(jc)}, {"low_dims_ok", row.low_dims_ok}});
        all_ok = all_ok && row.low_dims_ok;
    }
    emit(opt, {{"rows", std::move(jr)}}, census_table_tsv(table));
    return all_ok ? 0 : 1;
}

int cmd_check(const Options& opt, const std::string& gspec) {
    Graph g = load_graph(gspec);
    if (!is_k4_free(g)) throw std::invalid_argument("check requires a K4-free graph");
    TriangulationReport rep = verify_triangulation(g, dd_options(opt));
    ordered_json j{{"rays", rep.ray_count},
                   {"expected_rays", rep.expected_ray_count},
                   {"dim", rep.dim},
                   {"expected_dim", rep.expected_dim},
                   {"rays_match", rep.rays_match},
                   {"ok", rep.ok}};
    std::ostringstream os;
    os << "rays " << rep.ray_count << " expected " << rep.expected_ray_count << "\ndim "
       << rep.dim << " expected " << rep.expected_dim << "\nrays_match "
       << (rep.rays_match ? "true" : "false") << "\nok " << (rep.ok ? "true" : "false") << "\n";
    emit(opt, j, os.str());
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformation cones of graphical zonotopes, in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output with stable key order");
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    app.add_option("--max-orientations", opt.max_orientations,
                   "orientation enumeration budget (bit patterns)");
    app.add_option("--max-rays", opt.max_rays, "double-description intermediate ray budget");
    app.add_option("--max-fvector-rays", opt.fvector_cap,
                   "ray-count cap for face-lattice computations");
    app.add_flag("--stretch", opt.stretch, "allow stretch-tier table rows (cyc3 n = 6)");

    std::string gspec, lengths, family;
    int n_max = 5;

    auto* info = app.add_subcommand("info", "vertex, edge, triangle and clique counts");
    info->add_option("graph", gspec)->required();
    auto* cone = app.add_subcommand("cone", "build the cone; dimension, facets, validation");
    cone->add_option("graph", gspec)->required();
    auto* rays = app.add_subcommand("rays", "extreme rays with summand identification");
    rays->add_option("graph", gspec)->required();
    auto* fvec = app.add_subcommand("fvector", "f-vector of the deformation cone");
    fvec->add_option("graph", gspec)->required();
    auto* dec = app.add_subcommand("decompose", "Minkowski decomposition of a cone point");
    dec->add_option("graph", gspec)->required();
    dec->add_option("--lengths", lengths, "JSON vector, JSON file, or expression like '2*e(0,1) - 1*t(0,1,2)'")
        ->required();
    auto* census = app.add_subcommand("census", "ray count per polytope dimension");
    census->add_option("graph", gspec)->required();
    auto* table = app.add_subcommand("table", "family census table (TSV)");
    table->add_option("family", family)->required();
    table->add_option("--n-max", n_max, "largest n (default 5; 6 needs --stretch)");
    auto* check = app.add_subcommand("check", "verify the K4-free triangulation");
    check->add_option("graph", gspec)->required();

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_info(opt, gspec);
        if (cone->parsed()) return cmd_cone(opt, gspec);
        if (rays->parsed()) return cmd_rays(opt, gspec);
        if (fvec->parsed()) return cmd_fvector(opt, gspec);
        if (dec->parsed()) return cmd_decompose(opt, gspec, lengths);
        if (census->parsed()) return cmd_census(opt, gspec);
        if (table->parsed()) return cmd_table(opt, family, n_max);
        if (check->parsed()) return cmd_check(opt, gspec);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const effort_cap_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
