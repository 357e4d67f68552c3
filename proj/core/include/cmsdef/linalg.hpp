#ifndef CMSDEF_LINALG_HPP
#define CMSDEF_LINALG_HPP

#include <vector>

#include "cmsdef/ratk.hpp"

namespace cmsdef {

using KMat = std::vector<std::vector<RatK>>;

/* Right nullspace of a matrix with entries in Z[k], computed by
 * fraction-free (Bareiss) elimination.  Basis vectors are normalized so
 * that each has value 1 at its own free column and 0 at the other free
 * columns; order follows increasing free-column index.
 */
std::vector<std::vector<RatK>> nullspace(const std::vector<std::vector<KPoly>>& a, int cols);

/* Same, for Q(k) entries: rows are cleared of denominators first. */
std::vector<std::vector<RatK>> nullspace_ratk(const KMat& a, int cols);

/* In-place reduced row echelon form over Q(k); returns pivot columns. */
std::vector<int> rref(KMat& a);

int rank(KMat a);

/* Exact test: is `point` in the convex hull of `points`?  Phase-1 simplex
 * over arbitrary-precision rationals (Bland's rule, always terminates).
 */
bool in_convex_hull(const std::vector<int>& point,
                    const std::vector<std::vector<int>>& points);

} // namespace cmsdef

#endif
