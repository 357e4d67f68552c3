#ifndef CMSDEF_DIAGRAM_HPP
#define CMSDEF_DIAGRAM_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmsdef/rootsys.hpp"

namespace cmsdef {

using Pt = std::pair<int, int>;  // (x, y)

/* total order on boundary points: P > Q iff y_P > y_Q, or equal y and x_P < x_Q */
bool pt_greater(const Pt& a, const Pt& b);

/* Staircase line on the lattice.  kind gamma has horizontal rays (heights
 * 0 and n), kind gamma_hat vertical rays (x = 0 and x = m); verts are the
 * finite vertices in path order.
 */
struct PolyLine {
    enum class Kind { gamma, gamma_hat };
    Kind kind;
    std::vector<Pt> verts;
};

struct LatticeBox {
    int xlo, xhi, ylo, yhi;
};

using Edge = std::pair<Pt, Pt>;  // unit edge, endpoints in lexicographic order
using EdgeSet = std::set<Edge>;

/* unit edges of the line clipped to the box (rays included) */
EdgeSet line_edges(const PolyLine& line, const LatticeBox& box);

/* the pair Gamma_a, Gamma_hat_b of a dominant weight; throws otherwise */
std::pair<PolyLine, PolyLine> gamma_lines(const Weight& chi);

/* box covering every finite vertex of both lines, with margin */
LatticeBox weight_box(const Weight& chi);

using Square = Pt;  // identified by its lower-left vertex
using SquareSet = std::set<Square>;

/* D^+ and D^- for a dominant weight (union over the two blocks) */
std::pair<SquareSet, SquareSet> regions(const Weight& chi);

/* c_k of a unit square: x + k y of the lower-left vertex */
RatK c_weight(const Square& s);

/* geometric route to the Bernoulli generators:
 * r [ sum_{D+ \ D-} c^formulas{r-1} - sum_{D- \ D+} c^{r-1} ]
 */
RatK b_gen_geo(int r, const Weight& chi);

/* canonical encoding of Gamma_a union Gamma_hat_b; equal keys <=> equivalent */
std::string union_line_key(const Weight& chi);

/* bijection between odd positive roots and unit squares in [0,m] x [0,n] */
Square eta(const Root& a, int n, int m);
Root eta_inv(const Square& s, int n, int m);

struct NuComponent {
    std::vector<Square> cells;  // sorted lower-left corners
    std::vector<Root> roots;    // eta^{-1} of the cells, in chain order
    Exponent beta;              // sum of the roots as a weight shift
};

struct EqClassReport {
    Weight chi;
    Weight chi_min;
    int r = 0;
    std::vector<Weight> members;                 // sorted, |members| = 2^r
    std::vector<std::pair<Pt, Pt>> gamma_endpoints;  // (P_t, Q_t), t = 1..r+1
    std::vector<NuComponent> nu;                 // one entry per gap, t = 1..r
};

/* the full description of E(chi) from the polygonal-line geometry */
EqClassReport eq_class(const Weight& chi);

struct RootChainReport {
    std::vector<Root> all;                        // R(chi)
    std::vector<std::vector<Root>> components;    // orthogonal components, chain order
    std::vector<Exponent> betas;                  // beta_t per component
};

/* root-theoretic route: R(chi) from chains of the affine singular
 * condition, its orthogonal components and shift vectors; requires the
 * minimal class representative (equivalently chi in X_reg)
 */
RootChainReport r_chi(const Weight& chi_min);

/* ASCII picture of the two lines and the nu region (rows printed top down) */
std::string render_ascii(const Weight& chi);

} // namespace cmsdef

#endif
