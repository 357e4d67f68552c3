#ifndef CMSDEF_SPECTRAL_HPP
#define CMSDEF_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "cmsdef/diagram.hpp"
#include "cmsdef/linalg.hpp"
#include "cmsdef/rootsys.hpp"

namespace cmsdef {

/* Basis of { f quasi-invariant : M(f) inside support }, canonicalized as a
 * reduced echelon family over the orbit sums: distinct T-leading exponents
 * (all dominant), leading coefficient 1, fully reduced.
 */
struct QuasiSpace {
    int n = 0, m = 0;
    std::vector<Exponent> support;      // sorted
    std::vector<LaurentPoly> basis;     // T-leading order descending
    std::vector<Exponent> leads;        // T-leading exponent per basis element
};

QuasiSpace quasi_space(const std::vector<Exponent>& support, int n, int m);

/* canonical solve support for a leading weight: all mu with the same
 * coordinate sum, blockwise-sorted mu below chi in the dominance order,
 * inside the per-variable box of the classical product construction
 */
std::vector<Exponent> standard_support(const Weight& chi);

/* deformed elementary generators: unique leading terms (1^t 0..|0..) and
 * (0..|0.. (-1)^t), built from the deformed power sums by Newton recursion
 */
LaurentPoly deformed_e(int t, int n, int m);
LaurentPoly deformed_e_neg(int t, int n, int m);

/* quasi-invariant with unique <=-maximal term x^chi, leading coefficient 1 */
LaurentPoly f_chi(const Weight& chi);

/* Harish-Chandra evaluation theta_chi(L_r) via the leading coefficient */
RatK theta_eval(const Weight& chi, int r);

/* matrix of L_r on a QuasiSpace basis: L_r basis_j = sum_i mat[i][j] basis_i */
struct OperatorMatrix {
    int r = 0;
    KMat mat;
};

struct GenEigenspace {
    Weight chi;                        // the regular representative
    EqClassReport cls;
    QuasiSpace space;                  // ambient finite module W
    std::vector<OperatorMatrix> ops;   // r = 1 .. n+m+2 (two stability extras)
    std::vector<RatK> theta;           // class eigenvalue per operator
    std::vector<std::vector<RatK>> vectors;   // generalized eigenspace, W coords
    std::vector<LaurentPoly> polys;           // same vectors as polynomials
};

/* the generalized eigenspace of the class of chi inside W, chi in X_reg */
GenEigenspace gen_eigenspace(const Weight& chi);

/* full spectral split of the ambient module W: one generalized eigenspace
 * dimension per equivalence class appearing among the basis leads; their
 * sum must equal dim W
 */
std::vector<int> spectral_split_dims(const GenEigenspace& ge);

/* structure of the subalgebra of End(V) generated by the restrictions */
struct LocalAlgebraReport {
    int r = 0;
    int dimension = 0;          // expected 2^r
    int nilpotency_index = 0;   // smallest t with m^t = 0, expected r+1
    int cotangent_dim = 0;      // dim m/m^2, expected r
    bool commutative = false;
    bool local_structure_ok = false;  // all expectations above hold
    std::vector<KMat> square_zero_generators;     // r commuting generators
    bool square_free_basis_ok = false;            // their square-free products span
    std::vector<RatK> cyclic_vector;              // coordinates in the V basis
    bool regular_representation_ok = false;       // a -> a v is bijective
    // structure constants in the square-free-product basis: entry (i,j) is
    // the index of g_i g_j in that basis, or -1 when the product is 0
    std::vector<std::vector<int>> isomorphism_witness;
};

LocalAlgebraReport image_algebra(const GenEigenspace& ge);
LocalAlgebraReport image_algebra(const Weight& chi);

/* the unique joint eigenfunction of the class (socle generator) */
LaurentPoly eigenfunction(const GenEigenspace& ge);
LaurentPoly eigenfunction(const Weight& chi);

/* span{ products of deformed power sums supported in the window }
 * equals quasi_space(window)
 */
bool power_sum_generation_check(const std::vector<Exponent>& window, int n, int m);

/* exact square root in Q(k) when one exists */
std::optional<RatK> ratk_sqrt(const RatK& x);

/* resource cap for exact linear algebra, overridable via CMS_MAX_CELLS */
long max_solver_cells();

} // namespace cmsdef

#endif
