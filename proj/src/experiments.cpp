#include "zonocone/experiments.hpp"

#include <sstream>

#include "zonocone/parallel.hpp"

namespace zonocone {

std::map<int, long> ray_dimension_census(const Graph& g, const CensusOptions& opt) {
    DefCone dc = build_defcone(g, opt.max_patterns);
    DDOptions dd = opt.dd;
    if (dd.threads == 0) dd.threads = opt.threads;
    RayList rays = defcone_rays(dc, dd);
    std::vector<int> dims(rays.rays.size());
    parallel_chunks(rays.rays.size(), opt.threads,
                    [&](std::size_t lo, std::size_t hi, std::size_t) {
                        for (std::size_t i = lo; i < hi; ++i) {
                            LengthVector l = length_vector_from_ray(rays.rays[i]);
                            dims[i] = polytope_dim(build_polytope(dc.labels, l));
                        }
                    });
    std::map<int, long> hist;
    for (int d : dims) ++hist[d];
    return hist;
}

int minkowski_dimension(const Graph& g, const CensusOptions& opt) {
    auto hist = ray_dimension_census(g, opt);
    return hist.empty() ? 0 : hist.rbegin()->first;
}

std::vector<CensusCheckRow> census_formula_check(int n_lo, int n_hi, const CensusOptions& opt) {
    std::vector<CensusCheckRow> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        CensusCheckRow row;
        row.n = n;
        row.census = ray_dimension_census(cyc3_graph(n), opt);
        auto at = [&](int d) {
            auto it = row.census.find(d);
            return it == row.census.end() ? 0L : it->second;
        };
        row.low_dims_ok = at(1) == 3L * (n - 2) && at(2) == 6L * n - 16 && at(3) == 23L * (n - 3);
        out.push_back(std::move(row));
    }
    return out;
}

std::string census_line(const std::map<int, long>& census) {
    std::ostringstream os;
    bool first = true;
    for (auto [d, c] : census) {
        if (!first) os << " ";
        os << d << ":" << c;
        first = false;
    }
    return os.str();
}

std::string census_table_tsv(const std::vector<std::pair<int, std::map<int, long>>>& rows) {
    int max_dim = 0;
    for (const auto& [n, census] : rows)
        if (!census.empty()) max_dim = std::max(max_dim, census.rbegin()->first);
    std::ostringstream os;
    os << "n";
    for (int d = 1; d <= max_dim; ++d) os << "\t" << d;
    os << "\n";
    for (const auto& [n, census] : rows) {
        os << n;
        for (int d = 1; d <= max_dim; ++d) {
            os << "\t";
            auto it = census.find(d);
            if (it != census.end()) os << it->second;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace zonocone
