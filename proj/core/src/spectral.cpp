#include "cmsdef/spectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cmsdef/quasi.hpp"

namespace cmsdef {

long max_solver_cells() {
    if (const char* env = std::getenv("CMS_MAX_CELLS")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 4'000'000L;
}

namespace {

struct TDesc {
    bool operator()(const Exponent& a, const Exponent& b) const { return t_less(b, a); }
};

std::vector<Permutation> block_generators(int n, int m) {
    std::vector<Permutation> gens;
    for (int i = 0; i + 1 < n; ++i) gens.push_back(Permutation::transposition(n, m, i, i + 1));
    for (int j = n; j + 1 < n + m; ++j) gens.push_back(Permutation::transposition(n, m, j, j + 1));
    return gens;
}

} // namespace

QuasiSpace quasi_space(const std::vector<Exponent>& support, int n, int m) {
    std::set<Exponent> sup(support.begin(), support.end());
    // the support must be a union of S_n x S_m orbits
    for (const auto& e : sup)
        for (const auto& w : block_generators(n, m)) {
            Exponent img(n + m);
            for (int i = 0; i < n + m; ++i) img[w.img[i]] = e[i];
            if (!sup.count(img)) throw std::invalid_argument("support not symmetric");
        }

    // orbit sums, indexed by the dominant representative in descending T order
    std::map<Exponent, std::vector<Exponent>, TDesc> orbits;
    for (const auto& e : sup) orbits[sorted_blockwise(e, n, m)].push_back(e);
    std::vector<Exponent> reps;
    std::vector<LaurentPoly> orbit_sums;
    for (const auto& [rep, members] : orbits) {
        reps.push_back(rep);
        LaurentPoly s(n, m);
        for (const auto& e : members) s.add_term(e, RatK(1));
        orbit_sums.push_back(std::move(s));
    }
    const int cols = static_cast<int>(reps.size());

    // one representative quasi-condition suffices for invariant polynomials:
    // all other pairs are S_n x S_m conjugates of (x_1, x_{n+1})
    std::map<Exponent, std::vector<KPoly>> rows;
    if (n >= 1 && m >= 1) {
        for (int c = 0; c < cols; ++c) {
            LaurentPoly cond =
                (orbit_sums[c].xddx(0) - orbit_sums[c].xddx(n) * RatK::k()).subst_equal(n, 0);
            for (const auto& [e, v] : cond.terms()) {
                auto it = rows.try_emplace(e, std::vector<KPoly>(cols)).first;
                // entries are integer + integer*k by construction
                it->second[c] = v.num();
                if (!v.den().is_one()) throw std::logic_error("unexpected denominator");
            }
        }
    }
    if (static_cast<long>(rows.size()) * cols > max_solver_cells())
        throw std::length_error("quasi_space system exceeds CMS_MAX_CELLS");

    std::vector<std::vector<KPoly>> a;
    a.reserve(rows.size());
    for (auto& [e, row] : rows) a.push_back(std::move(row));
    auto null_vecs = nullspace(a, cols);

    // canonicalize: reduced echelon over the orbit coordinates (T descending)
    KMat mat(null_vecs.size(), std::vector<RatK>(cols, RatK(0)));
    for (size_t v = 0; v < null_vecs.size(); ++v) mat[v] = null_vecs[v];
    rref(mat);

    QuasiSpace qs;
    qs.n = n;
    qs.m = m;
    qs.support.assign(sup.begin(), sup.end());
    for (const auto& row : mat) {
        LaurentPoly f(n, m);
        int lead = -1;
        for (int c = 0; c < cols; ++c) {
            if (row[c].is_zero()) continue;
            if (lead < 0) lead = c;
            f += orbit_sums[c] * row[c];
        }
        if (lead < 0) continue;
        if (!is_quasi_invariant(f))
            throw std::logic_error("quasi_space basis element fails the full invariance check");
        qs.basis.push_back(std::move(f));
        qs.leads.push_back(reps[lead]);
    }
    return qs;
}

namespace {

// lattice points mu with the coordinate sum of chi, blockwise-sorted mu
// below chi in the dominance order, inside the given per-variable box
std::vector<Exponent> capped_downset(const Weight& chi, int even_lo, int even_hi, int odd_lo,
                                     int odd_hi) {
    const int n = chi.n, m = chi.m;
    const long total = chi.total();
    std::vector<Exponent> out;
    Exponent e(n + m, 0);
    auto rec = [&](auto&& self, int pos, long sum) -> void {
        if (pos == n + m - 1) {
            long last = total - sum;
            int lo = (pos < n) ? even_lo : odd_lo, hi = (pos < n) ? even_hi : odd_hi;
            if (last < lo || last > hi) return;
            e[pos] = static_cast<int>(last);
            if (partial_leq(sorted_blockwise(e, n, m), chi.chi)) out.push_back(e);
            return;
        }
        int lo = (pos < n) ? even_lo : odd_lo, hi = (pos < n) ? even_hi : odd_hi;
        for (int v = lo; v <= hi; ++v) {
            e[pos] = v;
            self(self, pos + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Exponent> standard_support(const Weight& chi) {
    const int n = chi.n, m = chi.m;
    return capped_downset(chi, chi.chi[n - 1] - 4 * m, chi.chi[0], chi.chi[n + m - 1],
                          4 * n + chi.chi[n]);
}

namespace {

LaurentPoly newton_elementary(int t, int n, int m, bool negative) {
    std::vector<LaurentPoly> e{LaurentPoly::one(n, m)};
    for (int d = 1; d <= t; ++d) {
        LaurentPoly acc(n, m);
        int sign = 1;
        for (int s = 1; s <= d; ++s) {
            LaurentPoly ps = deformed_power_sum(negative ? -s : s, n, m);
            if (negative) ps = ps * RatK::k();
            LaurentPoly term = e[d - s] * ps;
            acc += sign > 0 ? term : -term;
            sign = -sign;
        }
        e.push_back(acc * RatK(mpq_class(1, d)));
    }
    return e[t];
}

void require_unique_lead(const LaurentPoly& f, const Exponent& want, const char* what) {
    auto mx = max_terms(f);
    if (mx.size() != 1 || mx[0] != want)
        throw std::logic_error(std::string("unexpected leading structure in ") + what);
}

} // namespace

LaurentPoly deformed_e(int t, int n, int m) {
    if (t < 0 || t > n) throw std::invalid_argument("deformed_e needs 0 <= t <= n");
    LaurentPoly f = newton_elementary(t, n, m, false);
    Exponent want(n + m, 0);
    for (int i = 0; i < t; ++i) want[i] = 1;
    require_unique_lead(f, want, "deformed_e");
    return f * f.coeff(want).inverse();
}

LaurentPoly deformed_e_neg(int t, int n, int m) {
    if (t < 0 || t > m) throw std::invalid_argument("deformed_e_neg needs 0 <= t <= m");
    LaurentPoly f = newton_elementary(t, n, m, true);
    Exponent want(n + m, 0);
    for (int j = 0; j < t; ++j) want[n + m - 1 - j] = -1;
    require_unique_lead(f, want, "deformed_e_neg");
    return f * f.coeff(want).inverse();
}

namespace {

// product of deformed elementary generators when chi has a nonnegative
// even block tail and nonpositive odd block head
std::optional<LaurentPoly> product_leading(const Weight& chi) {
    const int n = chi.n, m = chi.m;
    if (chi.chi[n - 1] < 0 || chi.chi[n] > 0) return std::nullopt;
    LaurentPoly f = LaurentPoly::one(n, m);
    for (int t = 1; t <= n; ++t) {
        int mult = t < n ? chi.chi[t - 1] - chi.chi[t] : chi.chi[n - 1];
        if (mult > 0) f *= deformed_e(t, n, m).pow(static_cast<unsigned>(mult));
    }
    for (int t = 1; t <= m; ++t) {
        int mult = t < m ? chi.chi[n + m - t - 1] - chi.chi[n + m - t] : -chi.chi[n];
        if (mult > 0) f *= deformed_e_neg(t, n, m).pow(static_cast<unsigned>(mult));
    }
    require_unique_lead(f, chi.chi, "product construction");
    return f * f.coeff(chi.chi).inverse();
}

std::optional<LaurentPoly> lead_element(const QuasiSpace& qs, const Exponent& chi) {
    for (size_t i = 0; i < qs.basis.size(); ++i)
        if (qs.leads[i] == chi) return qs.basis[i];
    return std::nullopt;
}

} // namespace

LaurentPoly f_chi(const Weight& chi) {
    if (!is_dominant(chi)) throw std::domain_error("weight not dominant");
    if (auto p = product_leading(chi)) return *p;
    // solve over the lattice hull of the class orbits first; this matches
    // the minimal supports of the worked examples
    if (chi.n >= 1 && chi.m >= 1) {
        EqClassReport cls = eq_class(chi);
        std::vector<Exponent> pts;
        for (const auto& w : cls.members) {
            std::set<Exponent> orbit{w.chi};
            bool grew = true;
            while (grew) {
                grew = false;
                std::set<Exponent> next(orbit);
                for (const auto& e : orbit)
                    for (const auto& g : block_generators(chi.n, chi.m)) {
                        Exponent img(chi.n + chi.m);
                        for (int i = 0; i < chi.n + chi.m; ++i) img[g.img[i]] = e[i];
                        next.insert(img);
                    }
                if (next.size() != orbit.size()) {
                    orbit = std::move(next);
                    grew = true;
                }
            }
            pts.insert(pts.end(), orbit.begin(), orbit.end());
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        QuasiSpace qs = quasi_space(hull_lattice_points(pts), chi.n, chi.m);
        if (auto f = lead_element(qs, chi.chi)) return *f;
    }
    // grow the solve support gradually: a leading-term element found on a
    // small capped downset remains one on every larger support
    const int n = chi.n, m = chi.m;
    const int tmax = 4 * std::max(n, m) + 1;
    for (int t = 1; t <= tmax; ++t) {
        auto sup = capped_downset(chi, chi.chi[n - 1] - t, chi.chi[0] + t,
                                  chi.chi[n + m - 1] - t, chi.chi[n] + t);
        QuasiSpace qs = quasi_space(sup, n, m);
        if (auto f = lead_element(qs, chi.chi)) return *f;
    }
    throw std::logic_error("no quasi-invariant with the requested leading term");
}

RatK theta_eval(const Weight& chi, int r) {
    if (!is_dominant(chi)) throw std::domain_error("weight not dominant");
    LaurentPoly f = f_chi(chi);
    return integral_apply(r, f).coeff(chi.chi);
}

namespace {

/* ---- exact subspace helpers over Q(k) ---- */

// rows spanning the annihilator { y : y . v = 0 for all v in span }
KMat annihilator(const KMat& span_rows, int dim) {
    if (span_rows.empty()) {
        KMat full(dim, std::vector<RatK>(dim, RatK(0)));
        for (int i = 0; i < dim; ++i) full[i][i] = RatK(1);
        return full;
    }
    auto basis = nullspace_ratk(span_rows, dim);
    KMat out;
    for (auto& v : basis) out.push_back(std::move(v));
    return out;
}

// kernel of a matrix given by rows acting on coordinate vectors
KMat kernel_rows(const KMat& rows, int dim) {
    if (rows.empty()) {
        KMat full(dim, std::vector<RatK>(dim, RatK(0)));
        for (int i = 0; i < dim; ++i) full[i][i] = RatK(1);
        return full;
    }
    auto basis = nullspace_ratk(rows, dim);
    KMat out;
    for (auto& v : basis) out.push_back(std::move(v));
    return out;
}

KMat mat_mul(const KMat& a, const KMat& b) {
    const int r = static_cast<int>(a.size());
    const int inner = static_cast<int>(b.size());
    const int c = inner ? static_cast<int>(b[0].size()) : 0;
    KMat out(r, std::vector<RatK>(c, RatK(0)));
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < inner; ++t) {
            if (a[i][t].is_zero()) continue;
            for (int j = 0; j < c; ++j)
                if (!b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

std::vector<RatK> mat_vec(const KMat& a, const std::vector<RatK>& v) {
    std::vector<RatK> out(a.size(), RatK(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

// solve span_rows^T x = target exactly; empty optional when unsolvable
std::optional<std::vector<RatK>> express_in_span(const KMat& span_rows,
                                                 const std::vector<RatK>& target) {
    const int dim = static_cast<int>(target.size());
    const int k = static_cast<int>(span_rows.size());
    KMat aug(dim, std::vector<RatK>(k + 1, RatK(0)));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < k; ++j) aug[i][j] = span_rows[j][i];
        aug[i][k] = target[i];
    }
    auto pivots = rref(aug);
    std::vector<RatK> coeff(k, RatK(0));
    for (size_t p = 0; p < pivots.size(); ++p) {
        if (pivots[p] == k) return std::nullopt;  // inconsistent
        // locate the row of this pivot: rref puts pivot p in row p
        coeff[pivots[p]] = aug[p][k];
    }
    return coeff;
}

int span_rank(const KMat& rows) {
    if (rows.empty()) return 0;
    KMat c(rows);
    return rank(std::move(c));
}

// intersection over all operators of the stabilized kernels of
// (A_r - theta_r)^t, returned as canonical rows
KMat generalized_joint_kernel(const std::vector<OperatorMatrix>& ops,
                              const std::vector<RatK>& thetas, int dim) {
    KMat current;
    bool first = true;
    for (size_t t = 0; t < ops.size(); ++t) {
        KMat nmat = ops[t].mat;
        for (int i = 0; i < dim; ++i) nmat[i][i] -= thetas[t];
        KMat kspan;  // rows spanning ker N^s
        for (;;) {
            KMat ann = annihilator(kspan, dim);
            KMat constraint = mat_mul(ann, nmat);
            KMat next = kernel_rows(constraint, dim);
            if (next.size() == kspan.size()) break;
            kspan = std::move(next);
        }
        if (first) {
            current = std::move(kspan);
            first = false;
        } else {
            KMat ann1 = annihilator(current, dim);
            KMat ann2 = annihilator(kspan, dim);
            for (auto& row : ann2) ann1.push_back(std::move(row));
            current = kernel_rows(ann1, dim);
        }
        if (current.empty()) break;
    }
    rref(current);
    return current;
}

} // namespace

GenEigenspace gen_eigenspace(const Weight& chi) {
    if (!is_dominant(chi)) throw std::domain_error("weight not dominant");
    if (!is_regular(chi)) throw std::domain_error("not in X_reg");
    const int n = chi.n, m = chi.m;

    GenEigenspace ge;
    ge.chi = chi;
    ge.cls = eq_class(chi);

    // ambient support: lattice hull of the f_chi supports of every class
    // member together with the member orbits
    std::vector<Exponent> pts;
    for (const auto& w : ge.cls.members) {
        LaurentPoly f = f_chi(w);
        for (const auto& [e, c] : f.terms()) pts.push_back(e);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // close under the block symmetry before taking the hull
    {
        std::set<Exponent> closed(pts.begin(), pts.end());
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<Exponent> next(closed);
            for (const auto& e : closed)
                for (const auto& g : block_generators(n, m)) {
                    Exponent img(n + m);
                    for (int i = 0; i < n + m; ++i) img[g.img[i]] = e[i];
                    next.insert(img);
                }
            if (next.size() != closed.size()) {
                closed = std::move(next);
                grew = true;
            }
        }
        pts.assign(closed.begin(), closed.end());
    }
    ge.space = quasi_space(hull_lattice_points(pts), n, m);
    const int dim = static_cast<int>(ge.space.basis.size());

    // operator matrices for r = 1..n+m plus two stability extras
    const int rmax = n + m + 2;
    std::vector<std::vector<LaurentPoly>> chains;  // [basis][r-1]
    for (const auto& g : ge.space.basis) chains.push_back(integral_chain(rmax, g));

    for (int r = 1; r <= rmax; ++r) {
        OperatorMatrix op;
        op.r = r;
        op.mat.assign(dim, std::vector<RatK>(dim, RatK(0)));
        for (int j = 0; j < dim; ++j) {
            LaurentPoly residual = chains[j][r - 1];
            for (int i = 0; i < dim; ++i) {  // leads are T-descending
                RatK c = residual.coeff(ge.space.leads[i]);
                if (c.is_zero()) continue;
                op.mat[i][j] = c;
                residual -= ge.space.basis[i] * c;
            }
            if (!residual.is_zero())
                throw std::logic_error("integral does not preserve the quasi-invariant module");
            // triangularity: no component on T-larger leads
            for (int i = 0; i < dim; ++i)
                if (!op.mat[i][j].is_zero() && t_less(ge.space.leads[j], ge.space.leads[i]))
                    throw std::logic_error("operator matrix is not triangular");
        }
        ge.ops.push_back(std::move(op));
    }

    // class indices and eigenvalues from the diagonal
    std::set<Exponent> member_exps;
    for (const auto& w : ge.cls.members) member_exps.insert(w.chi);
    std::vector<int> class_idx;
    for (int i = 0; i < dim; ++i)
        if (member_exps.count(ge.space.leads[i])) class_idx.push_back(i);
    if (class_idx.empty()) throw std::logic_error("class leads missing from the module");
    for (const auto& op : ge.ops) {
        RatK theta = op.mat[class_idx[0]][class_idx[0]];
        for (int i : class_idx)
            if (op.mat[i][i] != theta)
                throw std::logic_error("class members disagree on the diagonal eigenvalue");
        ge.theta.push_back(theta);
    }

    // generalized eigenspace: intersection over r of the stabilized kernels.
    // r <= n+m can be too few: distinct classes may share the first n+m
    // eigenvalues (already at (1,1): (2|-2) and (-1|1) agree on L_1, L_2 and
    // split at L_3).  We use every computed integral and certify that the
    // last one no longer changes the space.
    {
        std::vector<OperatorMatrix> head(ge.ops.begin(), ge.ops.end() - 1);
        std::vector<RatK> head_theta(ge.theta.begin(), ge.theta.end() - 1);
        KMat v_head = generalized_joint_kernel(head, head_theta, dim);
        ge.vectors = generalized_joint_kernel(ge.ops, ge.theta, dim);
        if (v_head != ge.vectors)
            throw std::logic_error(
                "generalized eigenspace did not stabilize before the last integral");
    }
    for (const auto& v : ge.vectors) {
        LaurentPoly f(n, m);
        for (int i = 0; i < dim; ++i)
            if (!v[i].is_zero()) f += ge.space.basis[i] * v[i];
        ge.polys.push_back(std::move(f));
    }
    return ge;
}

std::vector<int> spectral_split_dims(const GenEigenspace& ge) {
    const int dim = static_cast<int>(ge.space.basis.size());
    // group the basis leads by equivalence class
    std::map<std::string, std::vector<int>> groups;
    std::vector<std::string> order;
    for (int i = 0; i < dim; ++i) {
        Weight w(ge.space.n, ge.space.m, ge.space.leads[i]);
        std::string key = union_line_key(w);
        if (!groups.count(key)) order.push_back(key);
        groups[key].push_back(i);
    }
    std::vector<int> dims;
    for (const auto& key : order) {
        const auto& idx = groups[key];
        std::vector<RatK> thetas;
        for (const auto& op : ge.ops) {
            RatK th = op.mat[idx[0]][idx[0]];
            for (int i : idx)
                if (op.mat[i][i] != th)
                    throw std::logic_error("equivalent leads disagree on the diagonal");
            thetas.push_back(th);
        }
        KMat v = generalized_joint_kernel(ge.ops, thetas, dim);
        dims.push_back(static_cast<int>(v.size()));
    }
    return dims;
}

namespace {

KMat identity_mat(int d) {
    KMat id(d, std::vector<RatK>(d, RatK(0)));
    for (int i = 0; i < d; ++i) id[i][i] = RatK(1);
    return id;
}

std::vector<RatK> flatten(const KMat& a) {
    std::vector<RatK> v;
    for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
    return v;
}

bool is_zero_mat(const KMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

// span closure of a set of matrices under multiplication, with 1
std::vector<KMat> algebra_closure(const std::vector<KMat>& gens, int d) {
    std::vector<KMat> basis{identity_mat(d)};
    KMat span_rows{flatten(basis[0])};
    auto try_add = [&](const KMat& cand) {
        KMat tmp = span_rows;
        tmp.push_back(flatten(cand));
        if (span_rank(tmp) > static_cast<int>(span_rows.size())) {
            // keep only independent rows
            span_rows.push_back(flatten(cand));
            basis.push_back(cand);
            return true;
        }
        return false;
    };
    for (const auto& g : gens) try_add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        const size_t sz = basis.size();
        for (size_t x = 0; x < sz && !grew; ++x)
            for (size_t y = 0; y < sz && !grew; ++y)
                if (try_add(mat_mul(basis[x], basis[y]))) grew = true;
    }
    return basis;
}

// span of all products of exactly `depth` generators and deeper
std::vector<KMat> power_span(const std::vector<KMat>& mgens, int depth) {
    std::vector<KMat> cur = mgens;
    for (int t = 1; t < depth; ++t) {
        std::vector<KMat> next;
        for (const auto& a : cur)
            for (const auto& g : mgens) next.push_back(mat_mul(a, g));
        cur = std::move(next);
    }
    // reduce to an independent subset, then close under further products
    KMat rows;
    std::vector<KMat> out;
    for (const auto& a : cur) {
        KMat tmp = rows;
        tmp.push_back(flatten(a));
        if (span_rank(tmp) > static_cast<int>(rows.size())) {
            rows.push_back(flatten(a));
            out.push_back(a);
        }
    }
    return out;
}

} // namespace

LocalAlgebraReport image_algebra(const GenEigenspace& ge) {
    const int wdim = static_cast<int>(ge.space.basis.size());
    const int d = static_cast<int>(ge.vectors.size());
    LocalAlgebraReport rep;
    rep.r = ge.cls.r;
    if (d != (1 << ge.cls.r))
        throw std::logic_error("generalized eigenspace dimension is not 2^r");

    // restrict N_r = A_r - theta_r to V
    std::vector<KMat> gens;
    for (size_t t = 0; t < ge.ops.size(); ++t) {
        KMat nmat = ge.ops[t].mat;
        for (int i = 0; i < wdim; ++i) nmat[i][i] -= ge.theta[t];
        KMat b(d, std::vector<RatK>(d, RatK(0)));
        for (int j = 0; j < d; ++j) {
            auto img = mat_vec(nmat, ge.vectors[j]);
            auto coeff = express_in_span(ge.vectors, img);
            if (!coeff)
                throw std::logic_error("generalized eigenspace is not operator-invariant");
            for (int i = 0; i < d; ++i) b[i][j] = (*coeff)[i];
        }
        gens.push_back(std::move(b));
    }

    // the unital algebra generated by the restrictions
    auto basis = algebra_closure(gens, d);
    rep.dimension = static_cast<int>(basis.size());
    rep.commutative = true;
    for (size_t x = 0; x < gens.size() && rep.commutative; ++x)
        for (size_t y = x + 1; y < gens.size() && rep.commutative; ++y)
            if (mat_mul(gens[x], gens[y]) != mat_mul(gens[y], gens[x])) rep.commutative = false;

    // the maximal ideal: span of all products of >= 1 generators
    auto mspan = power_span(gens, 1);
    int mdim = static_cast<int>(mspan.size());
    auto m2span = power_span(gens, 2);
    int m2dim = static_cast<int>(m2span.size());
    rep.cotangent_dim = mdim - m2dim;
    rep.nilpotency_index = 1;
    for (int t = 1; t <= d + 1; ++t) {
        if (power_span(gens, t).empty()) {
            rep.nilpotency_index = t;
            break;
        }
        rep.nilpotency_index = t + 1;
    }
    const int r = ge.cls.r;
    rep.local_structure_ok = rep.commutative && rep.dimension == (1 << r) &&
                             mdim == rep.dimension - 1 && rep.cotangent_dim == r &&
                             rep.nilpotency_index <= r + 1;

    // square-zero generators: lift a basis of m/m^2 and solve the conic
    if (r == 0) {
        rep.square_free_basis_ok = rep.dimension == 1;
    } else if (r == 1) {
        if (mdim != 1 || m2dim != 0) throw std::logic_error("unexpected ideal profile for r=1");
        rep.square_zero_generators.push_back(mspan[0]);
        rep.square_free_basis_ok = is_zero_mat(mat_mul(mspan[0], mspan[0])) &&
                                   !is_zero_mat(mspan[0]);
    } else if (r == 2) {
        if (mdim != 3 || m2dim != 1) throw std::logic_error("unexpected ideal profile for r=2");
        // pick v1, v2 spanning m mod m^2
        KMat rows{flatten(m2span[0])};
        std::vector<KMat> lifts;
        for (const auto& cand : mspan) {
            if (lifts.size() == 2) break;
            KMat tmp = rows;
            tmp.push_back(flatten(cand));
            if (span_rank(tmp) > static_cast<int>(rows.size())) {
                rows.push_back(flatten(cand));
                lifts.push_back(cand);
            }
        }
        if (lifts.size() != 2) throw std::logic_error("could not lift a basis of m/m^2");
        const KMat &v1 = lifts[0], &v2 = lifts[1], &z = m2span[0];
        auto in_z = [&](const KMat& a) {
            auto c = express_in_span(KMat{flatten(z)}, flatten(a));
            if (!c) throw std::logic_error("square not inside m^2");
            return (*c)[0];
        };
        RatK c1 = in_z(mat_mul(v1, v1));
        RatK c2 = in_z(mat_mul(v1, v2));
        RatK c3 = in_z(mat_mul(v2, v2));
        // isotropic directions of  c1 x^2 + 2 c2 x y + c3 y^2
        auto combine = [&](const RatK& x, const RatK& y) {
            KMat g(d, std::vector<RatK>(d, RatK(0)));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) g[i][j] = x * v1[i][j] + y * v2[i][j];
            return g;
        };
        std::vector<KMat> sq;
        if (c1.is_zero() && c3.is_zero()) {
            if (c2.is_zero()) throw std::logic_error("degenerate square form (m^2 unreachable)");
            sq = {combine(RatK(1), RatK(0)), combine(RatK(0), RatK(1))};
        } else if (c1.is_zero()) {
            sq = {combine(RatK(1), RatK(0)),
                  combine(c3, RatK(-2) * c2)};
        } else if (c3.is_zero()) {
            sq = {combine(RatK(0), RatK(1)),
                  combine(RatK(-2) * c2, c1)};
        } else {
            auto disc = ratk_sqrt(c2 * c2 - c1 * c3);
            if (!disc || disc->is_zero())
                throw std::logic_error("square form has no split isotropic pair in Q(k)");
            sq = {combine(-c2 + *disc, c1), combine(-c2 - *disc, c1)};
        }
        for (auto& g : sq) {
            if (!is_zero_mat(mat_mul(g, g)))
                throw std::logic_error("candidate generator does not square to zero");
            rep.square_zero_generators.push_back(g);
        }
        rep.square_free_basis_ok = true;
    } else {
        throw std::logic_error("square-zero generator search implemented for r <= 2");
    }

    // square-free products must form a basis of the algebra
    if (r >= 1) {
        std::vector<KMat> prods{identity_mat(d)};
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            KMat p = identity_mat(d);
            for (int t = 0; t < r; ++t)
                if (mask >> t & 1u) p = mat_mul(p, rep.square_zero_generators[t]);
            prods.push_back(p);
        }
        KMat rows;
        for (const auto& p : prods) rows.push_back(flatten(p));
        rep.square_free_basis_ok =
            rep.square_free_basis_ok && span_rank(rows) == (1 << r) &&
            rep.dimension == (1 << r);
        // structure constants: g_S g_T = g_{S union T} or 0 on repeats
        rep.isomorphism_witness.assign(prods.size(), std::vector<int>(prods.size(), -1));
        for (unsigned a = 0; a < prods.size(); ++a)
            for (unsigned b = 0; b < prods.size(); ++b) {
                KMat p = mat_mul(prods[a], prods[b]);
                if (a & b) {
                    if (!is_zero_mat(p)) rep.square_free_basis_ok = false;
                    continue;
                }
                rep.isomorphism_witness[a][b] = static_cast<int>(a | b);
                if (p != prods[a | b]) rep.square_free_basis_ok = false;
            }
    } else {
        rep.isomorphism_witness = {{0}};
    }

    // cyclic vector: try deterministic small-integer combinations
    for (int t = 1; t <= 16 && rep.cyclic_vector.empty(); ++t) {
        std::vector<RatK> v(d, RatK(0));
        RatK w(1);
        for (int i = 0; i < d; ++i) {
            v[i] = w;
            w = w * RatK(t);
        }
        // span of { a v : a in algebra basis }
        KMat rows;
        std::vector<KMat> prods{identity_mat(d)};
        for (const auto& g : rep.square_zero_generators) {
            size_t sz = prods.size();
            for (size_t x = 0; x < sz; ++x) prods.push_back(mat_mul(prods[x], g));
        }
        for (const auto& a : prods) rows.push_back(mat_vec(a, v));
        if (span_rank(rows) == d) rep.cyclic_vector = v;
    }
    rep.regular_representation_ok =
        !rep.cyclic_vector.empty() && rep.dimension == d && rep.square_free_basis_ok;
    return rep;
}

LocalAlgebraReport image_algebra(const Weight& chi) {
    return image_algebra(gen_eigenspace(chi));
}

LaurentPoly eigenfunction(const GenEigenspace& ge) {
    const int wdim = static_cast<int>(ge.space.basis.size());
    const int d = static_cast<int>(ge.vectors.size());
    // joint kernel of the restrictions
    KMat stacked;
    for (size_t t = 0; t < ge.ops.size(); ++t) {
        KMat nmat = ge.ops[t].mat;
        for (int i = 0; i < wdim; ++i) nmat[i][i] -= ge.theta[t];
        KMat b(d, std::vector<RatK>(d, RatK(0)));
        for (int j = 0; j < d; ++j) {
            auto img = mat_vec(nmat, ge.vectors[j]);
            auto coeff = express_in_span(ge.vectors, img);
            if (!coeff) throw std::logic_error("eigenspace is not operator-invariant");
            for (int i = 0; i < d; ++i) b[i][j] = (*coeff)[i];
        }
        for (auto& row : b) stacked.push_back(std::move(row));
    }
    auto joint = kernel_rows(stacked, d);
    if (joint.size() != 1)
        throw std::logic_error("joint eigenspace dimension is not 1");
    std::vector<RatK> w(wdim, RatK(0));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < wdim; ++i) w[i] += joint[0][j] * ge.vectors[j][i];
    LaurentPoly f(ge.space.n, ge.space.m);
    for (int i = 0; i < wdim; ++i)
        if (!w[i].is_zero()) f += ge.space.basis[i] * w[i];
    if (f.is_zero()) throw std::logic_error("joint eigenfunction is zero");
    return f * f.coeff(f.t_leading()).inverse();
}

LaurentPoly eigenfunction(const Weight& chi) {
    return eigenfunction(gen_eigenspace(chi));
}

bool power_sum_generation_check(const std::vector<Exponent>& window, int n, int m) {
    QuasiSpace qs = quasi_space(window, n, m);
    std::set<Exponent> win(window.begin(), window.end());
    // bounds for power-sum products: the unique leading term of a product
    // with positive total s+ and negative total s- is (s+, 0..|0.., -s-),
    // and it must lie inside the window
    int splus_max = 0, sminus_max = 0;
    for (const auto& e : win) {
        bool spike_pair = true;
        for (int i = 1; i < n + m - 1; ++i)
            if (e[i] != 0) spike_pair = false;
        if (!spike_pair || e[0] < 0 || e[n + m - 1] > 0) continue;
        splus_max = std::max(splus_max, e[0]);
        sminus_max = std::max(sminus_max, -e[n + m - 1]);
    }
    std::vector<std::vector<int>> plus_parts{{}}, minus_parts{{}};
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left, int maxpart, std::vector<std::vector<int>>& out)
            -> void {
            for (int p = std::min(left, maxpart); p >= 1; --p) {
                cur.push_back(p);
                out.push_back(cur);
                self(self, left - p, p, out);
                cur.pop_back();
            }
        };
        for (int t = 1; t <= splus_max; ++t) rec(rec, t, t, plus_parts);
        for (int t = 1; t <= sminus_max; ++t) rec(rec, t, t, minus_parts);
        std::sort(plus_parts.begin(), plus_parts.end());
        plus_parts.erase(std::unique(plus_parts.begin(), plus_parts.end()), plus_parts.end());
        std::sort(minus_parts.begin(), minus_parts.end());
        minus_parts.erase(std::unique(minus_parts.begin(), minus_parts.end()),
                          minus_parts.end());
    }
    std::vector<LaurentPoly> products;
    for (const auto& pp : plus_parts)
        for (const auto& mp : minus_parts) {
            LaurentPoly f = LaurentPoly::one(n, m);
            for (int s : pp) f *= deformed_power_sum(s, n, m);
            for (int s : mp) f *= deformed_power_sum(-s, n, m);
            bool inside = true;
            for (const auto& [e, c] : f.terms())
                if (!win.count(e)) {
                    inside = false;
                    break;
                }
            if (inside) products.push_back(std::move(f));
        }
    // compare spans over the window coordinates
    std::vector<Exponent> coords(win.begin(), win.end());
    std::map<Exponent, int> pos;
    for (size_t i = 0; i < coords.size(); ++i) pos[coords[i]] = static_cast<int>(i);
    auto to_row = [&](const LaurentPoly& f) {
        std::vector<RatK> row(coords.size(), RatK(0));
        for (const auto& [e, c] : f.terms()) row[pos.at(e)] = c;
        return row;
    };
    KMat rows_q, rows_p, rows_all;
    for (const auto& f : qs.basis) rows_q.push_back(to_row(f));
    for (const auto& f : products) rows_p.push_back(to_row(f));
    rows_all = rows_q;
    for (const auto& r : rows_p) rows_all.push_back(r);
    int rq = span_rank(rows_q), rp = span_rank(rows_p), ra = span_rank(rows_all);
    return rq == rp && rq == ra;
}

std::optional<RatK> ratk_sqrt(const RatK& x) {
    if (x.is_zero()) return RatK(0);
    // sqrt(num/den) = sqrt(num*den) / den
    KPoly p = x.num() * x.den();
    if (p.leading() < 0) return std::nullopt;
    if (p.degree() % 2 != 0) return std::nullopt;
    const int hd = p.degree() / 2;
    // rational-coefficient square root by matching coefficients downward
    std::vector<mpq_class> q(hd + 1, 0);
    mpz_class lead_sqrt;
    mpz_sqrt(lead_sqrt.get_mpz_t(), p.leading().get_mpz_t());
    if (lead_sqrt * lead_sqrt != p.leading()) return std::nullopt;
    q[hd] = lead_sqrt;
    for (int i = hd - 1; i >= 0; --i) {
        // coefficient of k^{i+hd} in q^2 equals p[i+hd]
        mpq_class acc = 0;
        for (int a = i + 1; a < hd; ++a) {
            int b = i + hd - a;
            if (b > hd || b < 0) continue;
            acc += q[a] * q[b];
        }
        mpq_class target = mpq_class(p.coeff(i + hd)) - acc;
        q[i] = target / (2 * q[hd]);
    }
    // clear denominators and verify exactly
    mpz_class lcm(1);
    for (const auto& c : q) {
        mpz_class d = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> zs(hd + 1);
    for (int i = 0; i <= hd; ++i) {
        mpq_class scaled = q[i] * mpq_class(lcm);
        zs[i] = scaled.get_num();
    }
    KPoly qz(zs);
    if (qz * qz != p * KPoly(lcm * lcm)) return std::nullopt;
    return RatK(qz, x.den() * KPoly(lcm));
}

} // namespace cmsdef
