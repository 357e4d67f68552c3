#ifndef CMSDEF_VERIFY_HPP
#define CMSDEF_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmsdef/rootsys.hpp"

namespace cmsdef::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    long cases = 0;          // instances checked
    std::string detail;      // first counterexample or a short summary
    double seconds = 0;
};

using NmList = std::vector<std::pair<int, int>>;

/* enumerate dominant weights of (n,m) with all |entries| <= box */
std::vector<Weight> dominant_box(int n, int m, int box);

/* deterministic family of quasi-invariant module supports with at most
 * `support_cap` monomials (lattice hulls of class orbit unions)
 */
std::vector<std::vector<Exponent>> support_family(int n, int m, int support_cap);

/* 1. [L_r, L_s] f = 0 on every basis element, r,s <= rmax */
CheckResult commutation(const NmList& nms, int rmax, int support_cap);
/* 2. L_r maps each module into itself and shrinks supports */
CheckResult invariance_support(const NmList& nms, int rmax, int support_cap);
/* 3. b_gen_eval == b_gen_geo on dominant boxes */
CheckResult bernoulli_identity(const NmList& nms, int box, int rmax);
/* 4. union-line keys partition boxes exactly like the b_r values */
CheckResult equivalence_criterion(const NmList& nms, int box);
/* 5. class structure: sizes, eta(R(chi)) = nu, components, shifts, minimality */
CheckResult class_structure(const NmList& nms, int box);
/* 6. sigma = pi, the round trip, and box coverage of the image */
CheckResult bijection(const NmList& nms, int maxsize, int weight_box);
/* 7. dim = 2^r and the direct-sum split of W */
CheckResult spectral_dimensions(const std::vector<Weight>& targets);
CheckResult spectral_dimensions(int box11, const std::vector<Weight>& extra);
/* 8. dual-number algebra profile for r = 0, 1 and an r = 2 class */
CheckResult dual_number_structure();
/* 9. unique joint eigenfunctions, L_r J = theta J for r <= 4 */
CheckResult unique_eigenfunctions(int box11, const std::vector<Weight>& extra);
/* 10. power-sum generation on fixed window families */
CheckResult power_sum_generation();

/* the full acceptance set with the pinned parameters */
std::vector<CheckResult> run_acceptance();

/* probabilistic pre-screen at a rational sample k = q: reports the first
 * numeric counterexample of the bernoulli identity, if any; the exact
 * suites above remain the authority
 */
std::optional<std::string> k_sample_screen(const NmList& nms, int box, int rmax,
                                           const mpq_class& q);

} // namespace cmsdef::verify

#endif
