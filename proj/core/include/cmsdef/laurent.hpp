#ifndef CMSDEF_LAURENT_HPP
#define CMSDEF_LAURENT_HPP

#include <map>
#include <set>
#include <vector>

#include "cmsdef/ratk.hpp"

namespace cmsdef {

/* Exponent vector in Z^{n+m}, identified with an integral weight. */
using Exponent = std::vector<int>;

/* partial order (7): all prefix sums of a are <= those of b */
bool partial_leq(const Exponent& a, const Exponent& b);

/* total refinement of partial_leq: lexicographic on prefix-sum vectors */
bool t_less(const Exponent& a, const Exponent& b);

/* blockwise weakly-decreasing rearrangement */
Exponent sorted_blockwise(Exponent e, int n, int m);

/* Sparse multivariate Laurent polynomial over Q(k) in x_1..x_{n+m}.
 * Terms are kept in lexicographic key order; zero coefficients are never
 * stored.
 */
class LaurentPoly {
public:
    LaurentPoly() : n_(0), m_(0) {}
    LaurentPoly(int n, int m) : n_(n), m_(m) {}
    static LaurentPoly constant(int n, int m, const RatK& c);
    static LaurentPoly one(int n, int m) { return constant(n, m, RatK(1)); }
    static LaurentPoly monomial(int n, int m, const Exponent& e, const RatK& c);

    int n() const { return n_; }
    int m() const { return m_; }
    int nvars() const { return n_ + m_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Exponent, RatK>& terms() const { return t_; }
    RatK coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const RatK& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& g) const;
    LaurentPoly operator-(const LaurentPoly& g) const;
    LaurentPoly operator*(const LaurentPoly& g) const;
    LaurentPoly operator*(const RatK& c) const;
    LaurentPoly& operator+=(const LaurentPoly& g) { *this = *this + g; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& g) { *this = *this - g; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& g) { *this = *this * g; return *this; }
    bool operator==(const LaurentPoly& g) const { return n_ == g.n_ && m_ == g.m_ && t_ == g.t_; }
    bool operator!=(const LaurentPoly& g) const { return !(*this == g); }

    LaurentPoly pow(unsigned e) const;

    /* x_i d/dx_i, 0-based index */
    LaurentPoly xddx(int i) const;
    /* multiply by the monomial x^e */
    LaurentPoly shifted(const Exponent& e) const;
    /* substitute x_j := x_i (0-based); variable j becomes unused */
    LaurentPoly subst_equal(int j, int i) const;
    /* exact division by (x_i - x_j); throws std::domain_error when inexact */
    LaurentPoly div_exact_diff(int i, int j) const;

    /* the T-largest exponent of the support (throws on zero) */
    const Exponent& t_leading() const;

private:
    int n_, m_;
    std::map<Exponent, RatK> t_;
    void check_dims(const LaurentPoly& g) const;
};

/* the <=-maximal elements of the support M(f) */
std::vector<Exponent> max_terms(const LaurentPoly& f);

/* all lattice points of conv(M(f)); throws on the zero polynomial */
std::vector<Exponent> support_members(const LaurentPoly& f);
std::vector<Exponent> hull_lattice_points(const std::vector<Exponent>& pts);

/* S(g) subseteq S(f), i.e. M(g) inside conv(M(f)) */
bool support_contained(const LaurentPoly& g, const LaurentPoly& f);

/* Element of S_n x S_m acting on the index set (0-based, block-preserving). */
struct Permutation {
    int n = 0, m = 0;
    std::vector<int> img;  // i -> img[i]
    static Permutation identity(int n, int m);
    static Permutation transposition(int n, int m, int a, int b);  // a,b same block
    Permutation compose(const Permutation& o) const;               // this after o
    bool block_preserving() const;
};

LaurentPoly sym_apply(const Permutation& w, const LaurentPoly& f);
bool sym_invariant(const LaurentPoly& f);

/* p_s = x_1^s+..+x_n^s + k^{-1}(x_{n+1}^s+..+x_{n+m}^s), s != 0 */
LaurentPoly deformed_power_sum(int s, int n, int m);

/* Schur polynomial s_lambda in the even (first n) or odd (last m) block */
enum class Block { even, odd };
LaurentPoly schur_poly(const std::vector<int>& lambda, Block block, int n, int m);

} // namespace cmsdef

#endif
