#ifndef CMSDEF_ROOTSYS_HPP
#define CMSDEF_ROOTSYS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cmsdef/laurent.hpp"
#include "cmsdef/quasi.hpp"
#include "cmsdef/ratk.hpp"

namespace cmsdef {

/* Integral weight chi = (a_1..a_n | b_1..b_m). */
struct Weight {
    int n = 0, m = 0;
    Exponent chi;  // length n+m

    Weight() = default;
    Weight(int n_, int m_, Exponent c) : n(n_), m(m_), chi(std::move(c)) {}

    int entry(int i) const { return chi[i]; }
    long total() const;
    std::string str() const;  // "(a1,...,an|b1,...,bm)"
    static Weight parse(std::string_view s, int n, int m);

    bool operator==(const Weight& o) const { return n == o.n && m == o.m && chi == o.chi; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return chi < o.chi; }
};

bool is_dominant(const Weight& chi);
bool is_regular(const Weight& chi);

/* Vector in V with Q(k) coordinates in the eps basis. */
using FormVector = std::vector<RatK>;

FormVector to_form_vector(const Weight& chi);

/* deformed bilinear form (eps_i, eps_j) = delta_ij k^{p(i)} */
RatK inner(const FormVector& u, const FormVector& v, int n);

/* the deformed Weyl vector */
FormVector rho(int n, int m);

/* Root eps_i - eps_j, 0-based indices. */
struct Root {
    int i = 0, j = 0;
    bool positive() const { return i < j; }
    bool odd(int n) const { return parity(i, n) != parity(j, n); }
    bool operator==(const Root& o) const { return i == o.i && j == o.j; }
};

std::vector<Root> odd_positive_roots(int n, int m);
FormVector root_vector(const Root& a, int nvars);
RatK root_norm2(const Root& a, int n);  // (alpha, alpha)

FormVector reflect(const Root& a, const FormVector& v, int n);
/* affine action: s_alpha o v = s_alpha(v + rho) - rho */
FormVector affine_reflect(const Root& a, const FormVector& v, int n, int m);

/* l^{+-}_alpha(chi) = (chi + rho, alpha) -+ (alpha,alpha)/2 as exact Q(k) values */
RatK l_plus(const Weight& chi, const Root& a);
RatK l_minus(const Weight& chi, const Root& a);

/* odd positive roots where the corresponding linear function vanishes identically */
std::vector<Root> singular_minus(const Weight& chi);
std::vector<Root> singular_plus(const Weight& chi);

/* Bernoulli polynomial B_r, exact rational coefficients in ascending order */
std::vector<mpq_class> bernoulli_poly(int r);
RatK bernoulli_eval(int r, const RatK& x);

/* the Bernoulli generators of the Harish-Chandra image, evaluated at chi */
RatK b_gen_eval(int r, const Weight& chi);
/* same, at a Q(k)-point of V (used for hyperplane identities) */
RatK b_gen_eval_at(int r, const FormVector& v, int n, int m);

} // namespace cmsdef

#endif
