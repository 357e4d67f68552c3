#ifndef CMSDEF_QUASI_HPP
#define CMSDEF_QUASI_HPP

#include <vector>

#include "cmsdef/laurent.hpp"

namespace cmsdef {

/* parity p(i): 0 on the first block, 1 on the second (0-based index) */
inline int parity(int i, int n) { return i < n ? 0 : 1; }

/* directional derivative along eps_i with respect to the deformed form:
 * acts on x^chi with eigenvalue k^{p(i)} chi_i, i.e. k^{p(i)} x_i d/dx_i
 */
LaurentPoly dir_derivative(int i, const LaurentPoly& f);

/* S_n x S_m invariance plus, for every pair i <= n < j, vanishing of
 * x_i df/dx_i - k x_j df/dx_j under the substitution x_j := x_i
 */
bool is_quasi_invariant(const LaurentPoly& f);

/* Linear map V -> Laurent polynomials, stored on the basis eps_i. */
struct QuasiMap {
    int n = 0, m = 0;
    std::vector<LaurentPoly> images;
    static QuasiMap constant(const LaurentPoly& f);
    static QuasiMap zero(int n, int m);
    bool operator==(const QuasiMap& o) const { return n == o.n && m == o.m && images == o.images; }
};

/* conditions: commutes with S_n x S_m; for every odd positive root
 * eps_i - eps_j both b*) phi(eps_i)-phi(eps_j) in (x_i - x_j) and a*)
 * d_alpha phi(v) in (x_i - x_j) on a spanning set of alpha-perp
 */
bool is_quasi_homomorphism(const QuasiMap& phi);

/* one application of the quantum Moser matrix:
 * psi(eps_i) = d_{eps_i} phi(eps_i)
 *              - sum_{j != i} k^{1-p(j)} x_i/(x_i-x_j) (phi(eps_i)-phi(eps_j))
 * throws std::domain_error("input not a quasi-homomorphism") when a
 * difference quotient fails to divide exactly
 */
QuasiMap moser_apply(const QuasiMap& phi);

/* L_r f = e* L^r e f  via r Moser steps on the constant map phi = f */
LaurentPoly integral_apply(int r, const LaurentPoly& f);

/* all of L_1 f .. L_R f, sharing one Moser chain */
std::vector<LaurentPoly> integral_chain(int rmax, const LaurentPoly& f);

/* the explicit second-order deformed CMS operator, expanded term by term
 * with exact cancellation of every pole at x_i = x_j
 */
LaurentPoly cms2_apply(const LaurentPoly& f);

/* [L_r, L_s] f == 0 */
bool commute_check(int r, int s, const LaurentPoly& f);

} // namespace cmsdef

#endif
