#pragma once

#include <cstddef>
#include <vector>

#include "zonocone/rational.hpp"

namespace zonocone {

/// Dense matrix of exact rationals.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<QVec> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(r, QVec(c)) {}
};

int rank(const QMatrix& m);

/// Basis of {x : m x = 0}, one basis vector per row. Empty matrix result
/// when the kernel is trivial.
QMatrix kernel_basis(const QMatrix& m);

/// Rank of a list of integer vectors (fraction-free elimination).
int rank_int(const std::vector<IVec>& rows);

/// One equality row, stored sparse: sum of coeff * x[col] = 0.
struct SparseRow {
    std::vector<std::pair<int, Rat>> terms;   // sorted by column
};

/// Pointed cone {x in R^ambient : equalities x = 0, x >= 0}.
struct ConeH {
    int ambient = 0;
    std::vector<SparseRow> equalities;
};

/// Extreme rays as primitive nonnegative integer vectors, sorted
/// lexicographically; canonical regardless of how they were computed.
struct RayList {
    std::vector<IVec> rays;
};

struct DDOptions {
    int max_dim = 128;                   // cap on the working (kernel) dimension
    std::size_t max_rays = std::size_t{1} << 20;   // cap on intermediate ray count
    int threads = 0;                     // 0 = hardware concurrency
    std::vector<int> insertion_order;    // test hook: permutation of deduped inequalities
};

/// Integer basis (rows) of the kernel of the equality system. Uses a
/// presolve pass over two-term rows before dense elimination, so it stays
/// cheap on the label-equality systems deformation cones produce.
std::vector<IVec> cone_kernel_basis(const ConeH& c);

/// Double description run over the kernel parameterization.
RayList extreme_rays(const ConeH& c, const DDOptions& opt = {});

/// Number of distinct inequalities the DD run will process (deduped
/// coordinate rows of the kernel parameterization).
int dd_inequality_count(const ConeH& c);

int cone_dimension(const RayList& rays);
int cone_dimension(const ConeH& c, const DDOptions& opt = {});

/// Number of irredundant coordinate inequalities: distinct tight-ray sets
/// spanning dimension dim-1, implied equalities excluded.
int facet_count(const ConeH& c, const RayList& rays);

/// Face counts by dimension 1..dim; the cone itself counts once, the apex
/// does not. Requires at most max_rays (<= 64) rays.
std::vector<long> f_vector(const ConeH& c, const RayList& rays, int max_rays = 64);

}  // namespace zonocone
