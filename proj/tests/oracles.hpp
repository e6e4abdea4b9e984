// Independent oracles used by the test suites. Everything here recomputes
// results by brute force, without touching the library's algorithmic paths:
// deletion-contraction for orientation counts, support-pattern enumeration
// for extreme rays, exhaustive hyperplanes for hulls, minors for rank.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "zonocone/cone.hpp"
#include "zonocone/graph.hpp"

namespace oracle {

using zonocone::ConeH;
using zonocone::Graph;
using zonocone::Int;
using zonocone::IVec;
using zonocone::QVec;
using zonocone::Rat;

// chromatic polynomial at t = -1 via deletion-contraction;
// |acyclic orientations| = |chi(-1)|
inline long chromatic_at_minus1(const Graph& g) {
    if (g.edges.empty()) return (g.n % 2 == 0) ? 1 : -1;
    Graph del(g.n, std::vector<std::pair<int, int>>(g.edges.begin(), g.edges.end() - 1));
    auto [i, j] = g.edges.back();
    Graph con = zonocone::contract(del, {{{i, j}}}).graph;
    return chromatic_at_minus1(del) - chromatic_at_minus1(con);
}

inline long acyclic_orientation_count(const Graph& g) {
    long v = chromatic_at_minus1(g);
    return v < 0 ? -v : v;
}

// extreme rays of {x >= 0 : Ax = 0} by support-pattern enumeration:
// a support S carries an extreme ray iff the equalities restricted to S have
// a one-dimensional kernel whose representative is nonzero on all of S with
// one sign. Feasible for ambient <= ~16.
inline std::vector<IVec> brute_force_extreme_rays(const ConeH& c) {
    int n = c.ambient;
    std::set<IVec> out;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) support.push_back(i);
        zonocone::QMatrix sub(static_cast<int>(c.equalities.size()),
                              static_cast<int>(support.size()));
        for (int r = 0; r < sub.rows; ++r)
            for (const auto& [col, v] : c.equalities[r].terms) {
                auto it = std::lower_bound(support.begin(), support.end(), col);
                if (it != support.end() && *it == col)
                    sub.a[r][it - support.begin()] = v;
            }
        zonocone::QMatrix kb = zonocone::kernel_basis(sub);
        if (kb.rows != 1) continue;
        const QVec& v = kb.a[0];
        int s = 0;
        bool full_support = true;
        for (const Rat& x : v) {
            if (sgn(x) == 0) { full_support = false; break; }
            if (s == 0) s = sgn(x);
            else if (sgn(x) != s) { full_support = false; break; }
        }
        if (!full_support) continue;
        QVec ray(n);
        for (std::size_t k = 0; k < support.size(); ++k) ray[support[k]] = s > 0 ? v[k] : -v[k];
        out.insert(zonocone::primitive_direction(ray));
    }
    return {out.begin(), out.end()};
}

// rank as the largest size of a nonsingular square minor
inline Rat det(const std::vector<QVec>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rat s = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (sgn(m[r][0]) == 0) continue;
        std::vector<QVec> sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            sub.emplace_back(m[i].begin() + 1, m[i].end());
        }
        Rat term = m[r][0] * det(sub);
        s += (r % 2 == 0) ? term : -term;
    }
    return s;
}

inline int rank_by_minors(const zonocone::QMatrix& m) {
    std::vector<int> rsel, csel;
    for (int k = std::min(m.rows, m.cols); k >= 1; --k) {
        std::vector<bool> rmask(m.rows, false), cmask(m.cols, false);
        std::fill(rmask.begin(), rmask.begin() + k, true);
        std::sort(rmask.begin(), rmask.end());
        do {
            std::vector<bool> cm(m.cols, false);
            std::fill(cm.begin(), cm.begin() + k, true);
            std::sort(cm.begin(), cm.end());
            do {
                std::vector<QVec> sub;
                for (int i = 0; i < m.rows; ++i) {
                    if (!rmask[i]) continue;
                    QVec row;
                    for (int j = 0; j < m.cols; ++j)
                        if (cm[j]) row.push_back(m.a[i][j]);
                    sub.push_back(std::move(row));
                }
                if (sgn(det(sub)) != 0) return k;
            } while (std::next_permutation(cm.begin(), cm.end()));
        } while (std::next_permutation(rmask.begin(), rmask.end()));
    }
    return 0;
}

// ---- exact convex hull for small point sets ----

// Affine coordinates of the points inside their own hull's affine span.
// Returns d-dimensional rational coordinates (d = affine dimension).
inline std::vector<QVec> affine_coordinates(const std::vector<QVec>& pts) {
    if (pts.empty()) return {};
    std::size_t n = pts[0].size();
    // independent difference vectors form the basis
    std::vector<QVec> basis;
    std::vector<IVec> ibasis;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = pts[i][c] - pts[0][c];
        ibasis.push_back(zonocone::primitive_direction(d));
        if (zonocone::rank_int(ibasis) == static_cast<int>(ibasis.size()))
            basis.push_back(std::move(d));
        else
            ibasis.pop_back();
    }
    std::size_t d = basis.size();
    std::vector<QVec> coords(pts.size(), QVec(d));
    if (d == 0) return coords;
    // solve basis^T c = p - p0 for each point via shared elimination
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        std::vector<QVec> aug(n, QVec(d + 1));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < d; ++c) aug[r][c] = basis[c][r];
            aug[r][d] = pts[pi][r] - pts[0][r];
        }
        // gaussian elimination, consistent by construction
        std::size_t row = 0;
        std::vector<int> piv_col(d, -1);
        for (std::size_t c = 0; c < d && row < n; ++c) {
            std::size_t pr = row;
            while (pr < n && sgn(aug[pr][c]) == 0) ++pr;
            if (pr == n) continue;
            std::swap(aug[row], aug[pr]);
            Rat inv = 1 / aug[row][c];
            for (auto& x : aug[row]) x *= inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == row || sgn(aug[i][c]) == 0) continue;
                Rat f = aug[i][c];
                for (std::size_t j = 0; j <= d; ++j) aug[i][j] -= f * aug[row][j];
            }
            piv_col[c] = static_cast<int>(row);
            ++row;
        }
        for (std::size_t c = 0; c < d; ++c) coords[pi][c] = aug[piv_col[c]][d];
    }
    return coords;
}

// Vertex index pairs of hull edges; input points must be distinct vertices.
inline std::vector<std::pair<int, int>> hull_edges(const std::vector<QVec>& pts) {
    int np = static_cast<int>(pts.size());
    if (np < 2) return {};
    std::vector<QVec> q = affine_coordinates(pts);
    std::size_t d = q[0].size();
    if (d == 0) return {};
    if (d == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < np; ++i) {
            if (q[i][0] < q[lo][0]) lo = i;
            if (q[i][0] > q[hi][0]) hi = i;
        }
        return {{std::min(lo, hi), std::max(lo, hi)}};
    }
    // facets: supporting hyperplanes through d affinely independent points
    std::set<std::vector<int>> facets;
    std::vector<int> sel(d);
    std::vector<bool> mask(np, false);
    std::fill(mask.begin(), mask.begin() + d, true);
    std::sort(mask.begin(), mask.end());
    do {
        sel.clear();
        for (int i = 0; i < np; ++i)
            if (mask[i]) sel.push_back(i);
        zonocone::QMatrix m(static_cast<int>(d - 1), static_cast<int>(d));
        for (std::size_t r = 0; r + 1 < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                m.a[r][c] = q[sel[r + 1]][c] - q[sel[0]][c];
        zonocone::QMatrix kb = zonocone::kernel_basis(m);
        if (kb.rows != 1) continue;   // degenerate subset
        const QVec& h = kb.a[0];
        int side = 0;
        bool supporting = true;
        std::vector<int> tight;
        for (int i = 0; i < np; ++i) {
            Rat s = 0;
            for (std::size_t c = 0; c < d; ++c) s += h[c] * (q[i][c] - q[sel[0]][c]);
            int sg = sgn(s);
            if (sg == 0) tight.push_back(i);
            else if (side == 0) side = sg;
            else if (sg != side) { supporting = false; break; }
        }
        if (supporting) facets.insert(std::move(tight));
    } while (std::next_permutation(mask.begin(), mask.end()));

    // smallest face containing a pair = intersection of facets containing it
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            std::vector<int> inter;
            bool any = false;
            for (const auto& f : facets) {
                if (!std::binary_search(f.begin(), f.end(), i) ||
                    !std::binary_search(f.begin(), f.end(), j))
                    continue;
                if (!any) {
                    inter = f;
                    any = true;
                } else {
                    std::vector<int> tmp;
                    std::set_intersection(inter.begin(), inter.end(), f.begin(), f.end(),
                                          std::back_inserter(tmp));
                    inter = std::move(tmp);
                }
            }
            if (any && inter.size() == 2) edges.emplace_back(i, j);
        }
    return edges;
}

}  // namespace oracle
