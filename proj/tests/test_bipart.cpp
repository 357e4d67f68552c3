#include <doctest.h>

#include <set>

#include "cmsdef/bipart.hpp"

using namespace cmsdef;

namespace {
Weight W(int n, int m, Exponent chi) { return Weight(n, m, std::move(chi)); }

std::vector<Partition> partitions_up_to(int maxsize) {
    std::vector<Partition> out{{}};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            out.push_back(cur);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    for (int total = 1; total <= maxsize; ++total) rec(rec, total, total);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}
} // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({}) == Partition{});
    CHECK(conjugate(conjugate({4, 2, 2, 1})) == Partition{4, 2, 2, 1});
}

TEST_CASE("hook membership") {
    CHECK(in_hook({3, 1}, 1, 1));
    CHECK_FALSE(in_hook({2, 2}, 1, 1));
    CHECK(in_hook({}, 0, 0));
    CHECK(in_hook({}, 2, 1));
    // the two characterizations agree
    for (const auto& lam : partitions_up_to(5))
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m)
                CHECK(in_hook(lam, n, m) == (part_at(conjugate(lam), m + 1) <= n));
}

TEST_CASE("cross membership") {
    CHECK(in_cross({}, {}, 1, 1));
    CHECK(in_cross({1}, {1}, 1, 1));
    CHECK_FALSE(in_cross({2, 2}, {2, 2}, 1, 1));
    CHECK(in_cross({5}, {1, 1, 1}, 1, 1));
    CHECK_FALSE(in_cross({5}, {3}, 1, 1));
    CHECK_FALSE(in_cross({2, 2, 2}, {}, 2, 1));
}

TEST_CASE("extremal pairs") {
    CHECK(extremal_pair({1}, {}, 1, 1) == std::pair{1, 1});
    CHECK(extremal_pair({}, {}, 1, 1) == std::pair{1, 1});
    CHECK(extremal_pair({1}, {1}, 1, 1) == std::pair{1, 1});
    CHECK(extremal_pair({2, 1}, {}, 1, 1) == std::pair{1, 0});
    CHECK_THROWS_AS(extremal_pair({2, 2}, {2, 2}, 1, 1), std::domain_error);
}

TEST_CASE("the reduction map F") {
    // fixed points: lambda in H(n,0), mu in H(0,m)
    FMapResult fx = f_map({3, 1}, {}, 2, 1);
    CHECK(fx.lam == Partition{3, 1});
    CHECK(fx.mu == Partition{});
    CHECK(fx.n == 2);
    CHECK(fx.m == 1);
    CHECK(extremal_pair({3, 1}, {}, 2, 1) == std::pair{2, 1});

    FMapResult f1 = f_map({2, 1}, {}, 1, 1);
    CHECK(f1.lam == Partition{1});
    CHECK(f1.mu == Partition{});
    CHECK(f1.n == 1);
    CHECK(f1.m == 0);

    FMapResult f2 = f_map({}, {}, 1, 1);
    CHECK(f2.lam == Partition{});
    CHECK(f2.mu == Partition{});

    // Lemma: F preserves the extremal pair and stays in the cross
    for (const auto& lam : partitions_up_to(4))
        for (const auto& mu : partitions_up_to(4))
            if (in_cross(lam, mu, 2, 1)) {
                auto ep = extremal_pair(lam, mu, 2, 1);
                FMapResult f = f_map(lam, mu, 2, 1);
                CHECK(in_cross(f.lam, f.mu, f.n, f.m));
                CHECK(extremal_pair(f.lam, f.mu, f.n, f.m) == ep);
            }
}

TEST_CASE("pi map") {
    CHECK(pi_map({}, {}, 1, 1) == W(1, 1, {0, 0}));
    CHECK(pi_map({}, {}, 2, 2) == W(2, 2, {0, 0, 0, 0}));
    CHECK(pi_map({1}, {}, 1, 1) == W(1, 1, {1, 0}));
    CHECK(pi_map({1}, {1}, 1, 1) == W(1, 1, {1, -1}));
    CHECK(pi_map({2, 1}, {}, 1, 1) == W(1, 1, {2, 1}));
    CHECK_THROWS_AS(pi_map({2, 2}, {2, 2}, 1, 1), std::domain_error);
}

TEST_CASE("young lines") {
    LatticeBox box{-1, 3, -1, 3};
    EdgeSet empty_line = young_edges(young_line({}), box);
    CHECK(empty_line.count(Edge{{0, 0}, {1, 0}}));
    CHECK(empty_line.count(Edge{{0, 0}, {0, 1}}));
    CHECK_FALSE(empty_line.count(Edge{{1, 0}, {1, 1}}));
    EdgeSet one = young_edges(young_line({1}), box);
    CHECK(one.count(Edge{{1, 0}, {1, 1}}));
    CHECK(one.count(Edge{{0, 1}, {1, 1}}));
    // theta_{1,1}(Y_empty) passes through (1,1)
    EdgeSet flipped = young_edges(theta_flip(1, 1, young_line({})), box);
    // and theta_{2,1}(Y_empty) through (1,2): rays at height n and column m
    EdgeSet flipped21 = young_edges(theta_flip(2, 1, young_line({})), LatticeBox{-1, 4, -1, 4});
    bool hits21 = false;
    for (const auto& e : flipped21)
        if (e.first == Pt{1, 2} || e.second == Pt{1, 2}) hits21 = true;
    CHECK(hits21);
    bool hits = false;
    for (const auto& e : flipped)
        if (e.first == Pt{1, 1} || e.second == Pt{1, 1}) hits = true;
    CHECK(hits);
}

TEST_CASE("sigma equals pi on examples") {
    CHECK(sigma_map({}, {}, 1, 1) == pi_map({}, {}, 1, 1));
    CHECK(sigma_map({1}, {1}, 1, 1) == W(1, 1, {1, -1}));
    CHECK(sigma_map({2, 1}, {}, 1, 1) == W(1, 1, {2, 1}));
}

TEST_CASE("sigma equals pi on a cross sweep, with the maximal-point corollary") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        for (const auto& lam : partitions_up_to(4))
            for (const auto& mu : partitions_up_to(4)) {
                if (!in_cross(lam, mu, n, m)) continue;
                Weight s = sigma_map(lam, mu, n, m);
                Weight p = pi_map(lam, mu, n, m);
                CHECK(s == p);
                // maximal intersection point is (m - s, p) for the extremal pair
                auto ep = extremal_pair(lam, mu, n, m);
                LatticeBox box{-9, 9, -9, 9};
                EdgeSet ey = young_edges(young_line(lam), box);
                EdgeSet et = young_edges(theta_flip(n, m, young_line(mu)), box);
                std::set<Pt> py, pt;
                for (const auto& e : ey) {
                    py.insert(e.first);
                    py.insert(e.second);
                }
                for (const auto& e : et) {
                    pt.insert(e.first);
                    pt.insert(e.second);
                }
                bool have = false;
                Pt M{0, 0};
                for (const auto& q : py)
                    if (pt.count(q) && (!have || pt_greater(q, M))) {
                        M = q;
                        have = true;
                    }
                REQUIRE(have);
                CHECK(M == Pt{m - ep.second, ep.first});
            }
        // the cross criterion is exactly non-empty intersection
        for (const auto& lam : partitions_up_to(4))
            for (const auto& mu : partitions_up_to(4)) {
                LatticeBox box{-9, 9, -9, 9};
                EdgeSet ey = young_edges(young_line(lam), box);
                EdgeSet et = young_edges(theta_flip(n, m, young_line(mu)), box);
                std::set<Pt> py;
                for (const auto& e : ey) {
                    py.insert(e.first);
                    py.insert(e.second);
                }
                bool meets = false;
                for (const auto& e : et)
                    if (py.count(e.first) || py.count(e.second)) meets = true;
                CHECK(meets == in_cross(lam, mu, n, m));
            }
    }
}

TEST_CASE("pi inverse") {
    auto [l0, m0] = pi_inverse(W(1, 1, {0, 0}));
    CHECK(l0 == Partition{});
    CHECK(m0 == Partition{});
    auto [l1, m1] = pi_inverse(W(1, 1, {1, -1}));
    CHECK(l1 == Partition{1});
    CHECK(m1 == Partition{1});
    auto [l2, m2] = pi_inverse(W(2, 2, {1, 0, 0, -1}));
    CHECK(pi_map(l2, m2, 2, 2) == W(2, 2, {1, 0, 0, -1}));
}

TEST_CASE("pi and pi_inverse are mutually inverse over a dominant box") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        std::vector<Exponent> all;
        std::vector<int> cur(n + m, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n + m) {
                all.push_back(cur);
                return;
            }
            for (int v = -2; v <= 2; ++v) {
                cur[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        int tested = 0;
        for (const auto& chi : all) {
            Weight w(n, m, chi);
            if (!is_dominant(w)) continue;
            auto [lam, mu] = pi_inverse(w);
            CHECK(pi_map(lam, mu, n, m) == w);
            CHECK(in_cross(lam, mu, n, m));
            ++tested;
        }
        CHECK(tested > 10);
    }
    // injectivity of pi on a sweep
    std::set<std::string> images;
    int count = 0;
    for (const auto& lam : partitions_up_to(3))
        for (const auto& mu : partitions_up_to(3))
            if (in_cross(lam, mu, 2, 1)) {
                images.insert(pi_map(lam, mu, 2, 1).str());
                ++count;
            }
    CHECK(static_cast<int>(images.size()) == count);
}
