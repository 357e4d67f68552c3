#ifndef CMSDEF_BIPART_HPP
#define CMSDEF_BIPART_HPP

#include <utility>
#include <vector>

#include "cmsdef/diagram.hpp"
#include "cmsdef/rootsys.hpp"

namespace cmsdef {

/* weakly decreasing nonnegative integers, no trailing zeros */
using Partition = std::vector<int>;

Partition conjugate(const Partition& p);
int part_at(const Partition& p, int i);  // 1-based, zero beyond the last part
long part_size(const Partition& p);

/* lambda in H(n,m): lambda_{n+1} <= m */
bool in_hook(const Partition& lam, int n, int m);

/* exists p+q=n, r+s=m with lambda in H(p,r) and mu in H(q,s) */
bool in_cross(const Partition& lam, const Partition& mu, int n, int m);

/* the extremal pair (p,s); throws std::domain_error when not in the cross */
std::pair<int, int> extremal_pair(const Partition& lam, const Partition& mu, int n, int m);

struct FMapResult {
    Partition lam, mu;
    int n, m;
};

/* the reduction F: strips lambda_{n+1} columns and mu'_{m+1} rows */
FMapResult f_map(const Partition& lam, const Partition& mu, int n, int m);

/* the algebraic bijection Cr(n,m) -> X^+(n,m) */
Weight pi_map(const Partition& lam, const Partition& mu, int n, int m);

/* Young diagram boundary: staircase with rays along both axes */
struct YoungLine {
    Partition lam;
    bool flipped = false;  // theta_{n,m} applied
    int n = 0, m = 0;      // flip parameters when flipped
};

YoungLine young_line(const Partition& lam);
YoungLine theta_flip(int n, int m, const YoungLine& line);
EdgeSet young_edges(const YoungLine& line, const LatticeBox& box);

/* the geometric route: split both boundary lines at the maximal
 * intersection point and reassemble them into Gamma_a, Gamma_hat_b;
 * equal to pi_map by construction of the correspondence
 */
Weight sigma_map(const Partition& lam, const Partition& mu, int n, int m);

/* inverse of pi: split Gamma_a union Gamma_hat_b at the maximal
 * intersection point of the two lines
 */
std::pair<Partition, Partition> pi_inverse(const Weight& chi);

} // namespace cmsdef

#endif
