#pragma once

#include <map>
#include <string>

#include "zonocone/decompose.hpp"

namespace zonocone {

struct CensusOptions {
    DDOptions dd;
    std::uint64_t max_patterns = std::uint64_t{1} << 24;
    int threads = 0;
};

/// For each extreme ray of the deformation cone, the affine dimension of its
/// polytope; returned as dimension -> ray count. Exact or refused, never
/// partial.
std::map<int, long> ray_dimension_census(const Graph& g, const CensusOptions& opt = {});

/// Maximal dimension of a polytope associated to a ray (0 for an edgeless graph).
int minkowski_dimension(const Graph& g, const CensusOptions& opt = {});

struct CensusCheckRow {
    int n = 0;
    std::map<int, long> census;
    bool low_dims_ok = false;   // counts at dims 1,2,3 match 3(n-2), 6n-16, 23(n-3)
};

/// Censuses of cyc3(n) for n in [n_lo, n_hi] against the closed-form counts
/// in dimensions 1..3.
std::vector<CensusCheckRow> census_formula_check(int n_lo, int n_hi,
                                                 const CensusOptions& opt = {});

/// "1:6 2:8 3:23"
std::string census_line(const std::map<int, long>& census);

/// Tab-separated table, one row per n, one column per dimension.
std::string census_table_tsv(const std::vector<std::pair<int, std::map<int, long>>>& rows);

}  // namespace zonocone
