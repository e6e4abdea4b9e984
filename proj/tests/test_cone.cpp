#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zonocone/cone.hpp"

using namespace zonocone;

static ConeH make_cone(int ambient, const std::vector<std::vector<int>>& rows) {
    ConeH c;
    c.ambient = ambient;
    for (const auto& r : rows) {
        SparseRow row;
        for (int i = 0; i < ambient; ++i)
            if (r[i] != 0) row.terms.emplace_back(i, Rat(r[i]));
        c.equalities.push_back(std::move(row));
    }
    return c;
}

static QMatrix make_q(const std::vector<std::vector<int>>& rows) {
    QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.a[i][j] = rows[i][j];
    return m;
}

static IVec ivec(const std::vector<int>& v) { return IVec(v.begin(), v.end()); }

TEST_CASE("rank and kernel basics") {
    CHECK(rank(make_q({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(kernel_basis(make_q({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).rows == 0);

    QMatrix kb = kernel_basis(make_q({{1, -1, 0}}));
    CHECK(rank(make_q({{1, -1, 0}})) == 1);
    CHECK(kb.rows == 2);
    for (const QVec& v : kb.a) CHECK(v[0] == v[1]);
}

TEST_CASE("rank matches minor oracle on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 4), entry(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        int r = dim(rng), c = dim(rng);
        std::vector<std::vector<int>> rows(r, std::vector<int>(c));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        QMatrix m = make_q(rows);
        CHECK(rank(m) == oracle::rank_by_minors(m));
        std::vector<IVec> irows;
        for (const auto& row : rows) irows.push_back(ivec(row));
        CHECK(rank_int(irows) == oracle::rank_by_minors(m));
    }
}

TEST_CASE("extreme_rays on simple cones") {
    RayList orthant = extreme_rays(make_cone(3, {}));
    CHECK(orthant.rays == std::vector<IVec>{ivec({0, 0, 1}), ivec({0, 1, 0}), ivec({1, 0, 0})});

    RayList r = extreme_rays(make_cone(3, {{1, 1, -1}}));
    CHECK(r.rays == std::vector<IVec>{ivec({0, 1, 1}), ivec({1, 0, 1})});

    // union-find presolve path: x0 = x1
    RayList uf = extreme_rays(make_cone(3, {{1, -1, 0}}));
    CHECK(uf.rays == std::vector<IVec>{ivec({0, 0, 1}), ivec({1, 1, 0})});

    // cone reduced to the origin
    RayList zero = extreme_rays(make_cone(2, {{1, 1}}));
    CHECK(zero.rays.empty());
}

TEST_CASE("K3 deformation cone system") {
    // two hexagon step equalities over the six labels
    ConeH c = make_cone(6, {{-1, 1, 1, -1, 0, 0}, {0, 0, -1, 1, -1, 1}});
    RayList r = extreme_rays(c);
    std::vector<IVec> expected = {
        ivec({0, 0, 0, 0, 1, 1}), ivec({0, 0, 1, 1, 0, 0}), ivec({0, 1, 0, 1, 1, 0}),
        ivec({1, 0, 1, 0, 0, 1}), ivec({1, 1, 0, 0, 0, 0})};
    CHECK(r.rays == expected);
    CHECK(cone_dimension(r) == 4);
    CHECK(facet_count(c, r) == 6);
    CHECK(f_vector(c, r) == std::vector<long>{5, 9, 6, 1});
}

TEST_CASE("f_vector of a simplicial cone") {
    ConeH c = make_cone(4, {});
    RayList r = extreme_rays(c);
    CHECK(f_vector(c, r) == std::vector<long>{4, 6, 4, 1});
}

TEST_CASE("insertion order does not change the output") {
    ConeH c = make_cone(6, {{-1, 1, 1, -1, 0, 0}, {0, 0, -1, 1, -1, 1}});
    RayList base = extreme_rays(c);
    std::mt19937 rng(7);
    std::vector<int> order(dd_inequality_count(c));
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        DDOptions opt;
        opt.insertion_order = order;
        CHECK(extreme_rays(c, opt).rays == base.rays);
    }
}

TEST_CASE("extreme_rays matches support-pattern oracle on random cones") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> amb(3, 8), neq(1, 4), entry(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        int n = amb(rng), m = neq(rng);
        std::vector<std::vector<int>> rows(m, std::vector<int>(n));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        ConeH c = make_cone(n, rows);
        RayList dd = extreme_rays(c);
        std::vector<IVec> brute = oracle::brute_force_extreme_rays(c);
        CHECK(dd.rays == brute);
    }
}

TEST_CASE("effort caps") {
    DDOptions tight_dim;
    tight_dim.max_dim = 2;
    CHECK_THROWS_AS(extreme_rays(make_cone(3, {}), tight_dim), effort_cap_error);

    DDOptions tight_rays;
    tight_rays.max_rays = 2;
    CHECK_THROWS_AS(extreme_rays(make_cone(4, {{1, 1, -1, -1}}), tight_rays), effort_cap_error);

    ConeH k3 = make_cone(6, {{-1, 1, 1, -1, 0, 0}, {0, 0, -1, 1, -1, 1}});
    CHECK_THROWS_AS(f_vector(k3, extreme_rays(k3), 3), effort_cap_error);
}

TEST_CASE("rays satisfy the equalities and nonnegativity") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<int>> rows(3, std::vector<int>(7));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        ConeH c = make_cone(7, rows);
        for (const IVec& ray : extreme_rays(c).rays) {
            Int nonzero = 0;
            for (const Int& x : ray) {
                CHECK(sgn(x) >= 0);
                nonzero += abs(x);
            }
            CHECK(nonzero > 0);
            for (const SparseRow& row : c.equalities) {
                Rat s = 0;
                for (auto& [col, v] : row.terms) s += v * Rat(ray[col]);
                CHECK(sgn(s) == 0);
            }
        }
    }
}
