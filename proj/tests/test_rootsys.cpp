#include <doctest.h>

#include "cmsdef/rootsys.hpp"

using namespace cmsdef;

namespace {
RatK half() { return RatK(KPoly(1), KPoly(2)); }
Weight W(int n, int m, Exponent chi) { return Weight(n, m, std::move(chi)); }
} // namespace

TEST_CASE("bilinear form") {
    FormVector e1 = root_vector(Root{0, 1}, 3);  // only used for sizes below
    FormVector u(3, RatK(0)), v(3, RatK(0));
    u[0] = RatK(1);
    v[0] = RatK(1);
    CHECK(inner(u, v, 2) == RatK(1));  // (eps_1, eps_1) = 1
    FormVector w1(3, RatK(0)), w2(3, RatK(0));
    w1[2] = RatK(1);
    w2[2] = RatK(1);
    CHECK(inner(w1, w2, 2) == RatK::k());  // odd block
    Root a{0, 2};
    CHECK(root_norm2(a, 2) == RatK(1) + RatK::k());
}

TEST_CASE("rho values") {
    auto r11 = rho(1, 1);
    CHECK(r11[0] == -half());
    CHECK(r11[1] == half());
    auto r21 = rho(2, 1);
    CHECK(r21[0] == half() * (-RatK::k() - 1));
    CHECK(r21[1] == half() * (RatK::k() - 1));
    CHECK(r21[2] == RatK(1));
    auto r10 = rho(1, 0);
    CHECK(r10[0].is_zero());
}

TEST_CASE("reflections") {
    // s_alpha fixes vectors orthogonal to alpha
    Root a{0, 1};  // even root in n=2
    FormVector v(3, RatK(0));
    v[0] = RatK(1);
    v[1] = RatK(1);
    CHECK(reflect(a, v, 2) == v);
    // affine action fixes -rho
    FormVector mr = rho(2, 1);
    for (auto& x : mr) x = -x;
    for (const Root& al : odd_positive_roots(2, 1))
        CHECK(affine_reflect(al, mr, 2, 1) == mr);
    // generic formula check: s_alpha o chi = chi - [2(chi+rho,alpha)/(alpha,alpha)] alpha
    Weight chi = W(1, 1, {0, 0});
    Root od{0, 1};
    FormVector lhs = affine_reflect(od, to_form_vector(chi), 1, 1);
    FormVector cpr = to_form_vector(chi);
    FormVector rh = rho(1, 1);
    for (int i = 0; i < 2; ++i) cpr[i] += rh[i];
    RatK c = RatK(2) * inner(cpr, root_vector(od, 2), 1) / root_norm2(od, 1);
    CHECK(lhs[0] == RatK(0) - c);
    CHECK(lhs[1] == RatK(0) + c);
}

TEST_CASE("singular roots") {
    // n=m=1: l^-(chi) reduces to a - k b
    CHECK(singular_minus(W(1, 1, {0, 0})).size() == 1);
    CHECK(singular_minus(W(1, 1, {2, 0})).empty());
    // (1|-1): l^+ vanishes, so not regular
    Weight w = W(1, 1, {1, -1});
    CHECK(singular_plus(w).size() == 1);
    CHECK(is_dominant(w));
    CHECK_FALSE(is_regular(w));
    CHECK(is_regular(W(1, 1, {0, 0})));
    // explicit integer reduction: l^- = (chi_i - j + 1) - k (chi_{n+j} + n - i)
    Weight q = W(2, 2, {1, 0, 0, -1});
    auto sm = singular_minus(q);
    REQUIRE(sm.size() == 2);
    CHECK(sm[0] == Root{0, 3});
    CHECK(sm[1] == Root{1, 2});
}

TEST_CASE("dominance") {
    CHECK(is_dominant(W(2, 2, {1, 0, 3, -1})));
    CHECK_FALSE(is_dominant(W(2, 1, {0, 1, 0})));
    CHECK(is_dominant(W(1, 1, {1, -1})));
}

TEST_CASE("Bernoulli polynomials") {
    auto b1 = bernoulli_poly(1);
    CHECK(b1 == std::vector<mpq_class>{mpq_class(-1, 2), mpq_class(1)});
    auto b2 = bernoulli_poly(2);
    CHECK(b2 == std::vector<mpq_class>{mpq_class(1, 6), mpq_class(-1), mpq_class(1)});
    // difference property B_r(x+1) - B_r(x) = r x^{r-1} at sampled points, all r <= 8
    for (int r = 1; r <= 8; ++r)
        for (int x = -4; x <= 4; ++x) {
            RatK lhs = bernoulli_eval(r, RatK(x + 1)) - bernoulli_eval(r, RatK(x));
            RatK rhs = RatK(r);
            for (int t = 0; t < r - 1; ++t) rhs *= RatK(x);
            CHECK(lhs == rhs);
        }
    // and as an identity in a formal point x = k (degree reasons make this exact)
    for (int r = 1; r <= 6; ++r) {
        RatK x = RatK::k();
        RatK lhs = bernoulli_eval(r, x + 1) - bernoulli_eval(r, x);
        RatK rhs = RatK(r) * RatK::k_pow(r - 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Bernoulli generators") {
    // r=1 telescopes to the coordinate sum
    for (const Weight& w : {W(1, 1, {3, -2}), W(2, 1, {2, 0, -1}), W(2, 2, {1, 1, 0, -3})})
        CHECK(b_gen_eval(1, w) == RatK(w.total()));
    CHECK(b_gen_eval(1, W(1, 1, {1, -1})).is_zero());
    for (int r = 1; r <= 6; ++r) {
        CHECK(b_gen_eval(r, W(2, 1, {0, 0, 0})).is_zero());
        // the (0|0) ~ (1|-1) equivalence seen through the generators
        CHECK(b_gen_eval(r, W(1, 1, {0, 0})) == b_gen_eval(r, W(1, 1, {1, -1})));
    }
}

TEST_CASE("quasi-invariance of the Harish-Chandra image generators") {
    // For every odd positive root and the hyperplane l^+_alpha(v) = 0:
    // b_r(v) = b_r(v - alpha).  The difference is a polynomial of degree
    // <= r in the hyperplane parameters, so vanishing on a (r+1)^dim grid
    // proves the identity.
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        FormVector rh = rho(n, m);
        for (const Root& a : odd_positive_roots(n, m)) {
            for (int r = 1; r <= 4; ++r) {
                // base point: v0 = -rho + alpha/2, so (v0+rho,alpha) = (a,a)/2
                FormVector v0(n + m, RatK(0));
                for (int i = 0; i < n + m; ++i) v0[i] = -rh[i];
                v0[a.i] += half();
                v0[a.j] -= half();
                // spanning directions of alpha-perp
                std::vector<FormVector> dirs;
                for (int s = 0; s < n + m; ++s) {
                    if (s == a.i || s == a.j) continue;
                    FormVector d(n + m, RatK(0));
                    d[s] = RatK(1);
                    dirs.push_back(d);
                }
                FormVector vp(n + m, RatK(0));
                vp[a.i] = RatK(1);
                vp[a.j] = RatK::k_pow(-1);
                dirs.push_back(vp);
                // grid sweep
                std::vector<int> c(dirs.size(), 0);
                for (;;) {
                    FormVector v(v0);
                    for (size_t t = 0; t < dirs.size(); ++t)
                        for (int i = 0; i < n + m; ++i) v[i] += RatK(c[t]) * dirs[t][i];
                    FormVector vma(v);
                    vma[a.i] -= RatK(1);
                    vma[a.j] += RatK(1);
                    CHECK(b_gen_eval_at(r, v, n, m) == b_gen_eval_at(r, vma, n, m));
                    size_t t = 0;
                    while (t < c.size() && c[t] == r) c[t++] = 0;
                    if (t == c.size()) break;
                    ++c[t];
                }
            }
        }
    }
}

TEST_CASE("weight parse and print") {
    Weight w = Weight::parse("(1,0|3,-1)", 2, 2);
    CHECK(w.str() == "(1,0|3,-1)");
    CHECK(Weight::parse(" ( 2 | 0 ) ", 1, 1) == W(1, 1, {2, 0}));
    CHECK_THROWS_AS(Weight::parse("(0|)", 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Weight::parse("(0,1|2)", 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Weight::parse("(a|b)", 1, 1), std::invalid_argument);
    Weight e = Weight::parse("(1|)", 1, 0);
    CHECK(e.str() == "(1|)");
}
