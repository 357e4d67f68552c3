#include <doctest.h>

#include <random>

#include "cmsdef/linalg.hpp"

using namespace cmsdef;

TEST_CASE("nullspace over Z[k]") {
    // x0 + k x1 = 0, rank 1, nullity 1
    std::vector<std::vector<KPoly>> a = {{KPoly(1), KPoly::variable()}};
    auto ns = nullspace(a, 2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][1] == RatK(1));
    CHECK(ns[0][0] == -RatK::k());
    // verify A v = 0
    CHECK((RatK(1) * ns[0][0] + RatK::k() * ns[0][1]).is_zero());
}

TEST_CASE("nullspace of a random rank-deficient system is exact") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const int cols = 5, base_rows = 2;
        std::vector<std::vector<KPoly>> a;
        for (int r = 0; r < base_rows; ++r) {
            std::vector<KPoly> row;
            for (int c = 0; c < cols; ++c)
                row.push_back(KPoly::monomial(d(rng), 1) + KPoly(d(rng)));
            a.push_back(row);
        }
        // add dependent rows
        std::vector<KPoly> dep(cols);
        for (int c = 0; c < cols; ++c) dep[c] = a[0][c] * KPoly(2) - a[1][c] * KPoly::variable();
        a.push_back(dep);
        auto ns = nullspace(a, cols);
        CHECK(ns.size() >= cols - base_rows);
        for (const auto& v : ns)
            for (const auto& row : a) {
                RatK s(0);
                for (int c = 0; c < cols; ++c) s += RatK(row[c]) * v[c];
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("rref and rank over Q(k)") {
    KMat a = {{RatK(1), RatK::k()}, {RatK::k(), RatK::k() * RatK::k()}};
    CHECK(rank(a) == 1);
    KMat b = {{RatK(1), RatK(0)}, {RatK(0), RatK::k()}};
    CHECK(rank(b) == 2);
}

TEST_CASE("convex hull membership in 2d") {
    std::vector<std::vector<int>> tri = {{0, 0}, {4, 0}, {0, 4}};
    CHECK(in_convex_hull({1, 1}, tri));
    CHECK(in_convex_hull({2, 2}, tri));   // on the edge
    CHECK(in_convex_hull({0, 0}, tri));   // vertex
    CHECK_FALSE(in_convex_hull({3, 3}, tri));
    CHECK_FALSE(in_convex_hull({-1, 0}, tri));
}

TEST_CASE("convex hull membership in 4d degenerate (affine subspace)") {
    // segment between two points in Z^4
    std::vector<std::vector<int>> seg = {{2, 0, 0, -2}, {-2, 0, 0, 2}};
    CHECK(in_convex_hull({0, 0, 0, 0}, seg));
    CHECK(in_convex_hull({1, 0, 0, -1}, seg));
    CHECK_FALSE(in_convex_hull({1, 0, 0, 1}, seg));
    CHECK_FALSE(in_convex_hull({1, 1, -1, -1}, seg));
}
