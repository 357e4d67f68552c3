#include "cmsdef/verify.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "cmsdef/bipart.hpp"
#include "cmsdef/diagram.hpp"
#include "cmsdef/linalg.hpp"
#include "cmsdef/quasi.hpp"
#include "cmsdef/spectral.hpp"

namespace cmsdef::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point t0 = Clock::now();
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

std::string weight_list(const std::vector<Weight>& ws) {
    std::string s;
    for (const auto& w : ws) s += w.str() + " ";
    return s;
}

std::vector<Partition> partitions_up_to(int maxsize) {
    std::vector<Partition> out{{}};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            out.push_back(cur);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    for (int total = 1; total <= maxsize; ++total) rec(rec, total, total);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<Weight> dominant_box(int n, int m, int box) {
    std::vector<Weight> out;
    Exponent cur(n + m, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n + m) {
            Weight w(n, m, cur);
            if (is_dominant(w)) out.push_back(w);
            return;
        }
        for (int v = -box; v <= box; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<Exponent>> support_family(int n, int m, int support_cap) {
    std::vector<std::vector<Exponent>> out;
    std::set<std::vector<Exponent>> seen;
    auto add = [&](std::vector<Exponent> s) {
        if (static_cast<int>(s.size()) > support_cap || s.empty()) return;
        if (seen.insert(s).second) out.push_back(std::move(s));
    };
    add(standard_support(Weight(n, m, Exponent(n + m, 0))));
    for (const Weight& w : dominant_box(n, m, 2)) {
        if (out.size() >= 4) break;
        // keep to the product-constructible corner so f_chi stays cheap
        if (w.chi[n - 1] < 0 || w.chi[n] > 0) continue;
        add(support_members(f_chi(w)));
    }
    return out;
}

CheckResult commutation(const NmList& nms, int rmax, int support_cap) {
    Timer timer;
    CheckResult res{"commutation [L_r,L_s] = 0", true, 0, "", 0};
    for (auto [n, m] : nms) {
        for (const auto& sup : support_family(n, m, support_cap)) {
            QuasiSpace qs = quasi_space(sup, n, m);
            for (const auto& f : qs.basis) {
                auto chain = integral_chain(rmax, f);
                for (int r = 1; r <= rmax && res.pass; ++r)
                    for (int s = r + 1; s <= rmax && res.pass; ++s) {
                        ++res.cases;
                        if (integral_apply(r, chain[s - 1]) != integral_apply(s, chain[r - 1])) {
                            res.pass = false;
                            std::ostringstream os;
                            os << "counterexample at (n,m)=(" << n << "," << m << "), r=" << r
                               << ", s=" << s;
                            res.detail = os.str();
                        }
                    }
            }
        }
    }
    if (res.pass) res.detail = std::to_string(res.cases) + " commutators vanish exactly";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult invariance_support(const NmList& nms, int rmax, int support_cap) {
    Timer timer;
    CheckResult res{"invariance and support preservation", true, 0, "", 0};
    for (auto [n, m] : nms) {
        for (const auto& sup : support_family(n, m, support_cap)) {
            QuasiSpace qs = quasi_space(sup, n, m);
            for (const auto& f : qs.basis) {
                auto chain = integral_chain(rmax, f);
                for (const auto& lrf : chain) {
                    ++res.cases;
                    // expression in the basis by leading terms
                    LaurentPoly residual = lrf;
                    for (size_t i = 0; i < qs.basis.size(); ++i) {
                        RatK c = residual.coeff(qs.leads[i]);
                        if (!c.is_zero()) residual -= qs.basis[i] * c;
                    }
                    bool inside = residual.is_zero();
                    bool shrinks = support_contained(lrf, f);
                    if (!inside || !shrinks) {
                        res.pass = false;
                        res.detail = "failure at (n,m)=(" + std::to_string(n) + "," +
                                     std::to_string(m) + ")" + (inside ? "" : " [expression]") +
                                     (shrinks ? "" : " [support]");
                        res.seconds = timer.elapsed();
                        return res;
                    }
                }
            }
        }
    }
    res.detail = std::to_string(res.cases) + " images verified inside their modules";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult bernoulli_identity(const NmList& nms, int box, int rmax) {
    Timer timer;
    CheckResult res{"Bernoulli generators: sum formula = square-count formula", true, 0, "", 0};
    for (auto [n, m] : nms)
        for (const Weight& w : dominant_box(n, m, box))
            for (int r = 1; r <= rmax; ++r) {
                ++res.cases;
                if (b_gen_eval(r, w) != b_gen_geo(r, w)) {
                    res.pass = false;
                    res.detail = "counterexample at " + w.str() + ", r=" + std::to_string(r);
                    res.seconds = timer.elapsed();
                    return res;
                }
            }
    res.detail = std::to_string(res.cases) + " values agree exactly";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult equivalence_criterion(const NmList& nms, int box) {
    Timer timer;
    CheckResult res{"equivalence: union-line keys <=> all Bernoulli values", true, 0, "", 0};
    for (auto [n, m] : nms) {
        const int rmax = 2 * box * (n + m);  // twice the total cell bound
        std::map<std::string, std::vector<size_t>> by_key;
        std::map<std::string, std::vector<size_t>> by_vals;
        auto ws = dominant_box(n, m, box);
        for (size_t i = 0; i < ws.size(); ++i) {
            by_key[union_line_key(ws[i])].push_back(i);
            std::string v;
            for (int r = 1; r <= rmax; ++r) v += b_gen_eval(r, ws[i]).str() + ";";
            by_vals[v].push_back(i);
            ++res.cases;
        }
        std::set<std::vector<size_t>> pk, pv;
        for (auto& [k, grp] : by_key) pk.insert(grp);
        for (auto& [k, grp] : by_vals) pv.insert(grp);
        if (pk != pv) {
            res.pass = false;
            res.detail = "partitions differ on the (" + std::to_string(n) + "," +
                         std::to_string(m) + ") box";
            res.seconds = timer.elapsed();
            return res;
        }
    }
    res.detail = std::to_string(res.cases) + " weights, both partitions coincide";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult class_structure(const NmList& nms, int box) {
    Timer timer;
    CheckResult res{"class structure: size, eta(R(chi)) = nu, shifts, minimality", true, 0, "",
                    0};
    auto fail = [&](const Weight& w, const std::string& why) {
        res.pass = false;
        res.detail = "class of " + w.str() + ": " + why;
        res.seconds = timer.elapsed();
        return res;
    };
    for (auto [n, m] : nms) {
        std::set<std::string> done;
        for (const Weight& w : dominant_box(n, m, box)) {
            EqClassReport rep = eq_class(w);
            if (!done.insert(rep.chi_min.str()).second) continue;
            ++res.cases;
            if (rep.members.size() != (1u << singular_minus(rep.chi_min).size()))
                return fail(w, "size is not 2^{#singular roots}");
            RootChainReport rc = r_chi(rep.chi_min);
            std::set<Square> nu_cells, from_roots;
            for (const auto& c : rep.nu) nu_cells.insert(c.cells.begin(), c.cells.end());
            for (const Root& a : rc.all) from_roots.insert(eta(a, n, m));
            if (nu_cells != from_roots) return fail(w, "eta(R(chi)) != nu");
            if (rc.components.size() != rep.nu.size())
                return fail(w, "component counts differ");
            // orthogonal components match connected components cellwise
            {
                std::set<std::set<Square>> geom, alg;
                for (const auto& c : rep.nu)
                    geom.insert(std::set<Square>(c.cells.begin(), c.cells.end()));
                for (const auto& comp : rc.components) {
                    std::set<Square> cells;
                    for (const Root& a : comp) cells.insert(eta(a, n, m));
                    alg.insert(cells);
                }
                if (geom != alg) return fail(w, "components do not align");
            }
            // members = chi_min + subsets of the betas
            {
                std::set<Exponent> from_shifts;
                const int r = static_cast<int>(rc.betas.size());
                for (unsigned mask = 0; mask < (1u << r); ++mask) {
                    Exponent x = rep.chi_min.chi;
                    for (int t = 0; t < r; ++t)
                        if (mask >> t & 1u)
                            for (int i = 0; i < n + m; ++i) x[i] += rc.betas[t][i];
                    from_shifts.insert(x);
                }
                std::set<Exponent> members;
                for (const auto& mem : rep.members) members.insert(mem.chi);
                if (members != from_shifts) return fail(w, "members != chi_min + shifts");
            }
            // exactly one member passes the minimality product criterion
            int reg = 0;
            for (const auto& mem : rep.members)
                if (is_regular(mem)) ++reg;
            if (reg != 1 || !is_regular(rep.chi_min))
                return fail(w, "minimal member criterion");
            // affine group elements realize the shifts and commute
            auto apply_g = [&](size_t t, FormVector v) {
                for (const Root& a : rc.components[t]) v = affine_reflect(a, v, n, m);
                return v;
            };
            for (size_t t = 0; t < rc.components.size(); ++t) {
                FormVector img = apply_g(t, to_form_vector(rep.chi_min));
                for (int i = 0; i < n + m; ++i)
                    if (img[i] != RatK(rep.chi_min.chi[i] + rc.betas[t][i]))
                        return fail(w, "g_t does not realize its shift");
            }
            for (size_t s = 0; s < rc.components.size(); ++s)
                for (size_t t = s + 1; t < rc.components.size(); ++t)
                    for (const auto& mem : rep.members) {
                        FormVector v1 = apply_g(s, apply_g(t, to_form_vector(mem)));
                        FormVector v2 = apply_g(t, apply_g(s, to_form_vector(mem)));
                        if (v1 != v2) return fail(w, "g_s, g_t do not commute");
                    }
        }
    }
    res.detail = std::to_string(res.cases) + " classes verified";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult bijection(const NmList& nms, int maxsize, int weight_box) {
    Timer timer;
    CheckResult res{"bipartition bijection: sigma = pi, round trip, coverage", true, 0, "", 0};
    auto parts = partitions_up_to(maxsize);
    for (auto [n, m] : nms) {
        std::set<std::string> image;
        for (const auto& lam : parts)
            for (const auto& mu : parts) {
                if (!in_cross(lam, mu, n, m)) continue;
                ++res.cases;
                Weight p = pi_map(lam, mu, n, m);
                Weight s = sigma_map(lam, mu, n, m);
                if (p != s) {
                    res.pass = false;
                    res.detail = "sigma != pi at " + p.str();
                    res.seconds = timer.elapsed();
                    return res;
                }
                auto [l2, m2] = pi_inverse(p);
                if (l2 != lam || m2 != mu) {
                    res.pass = false;
                    res.detail = "round trip failed at " + p.str();
                    res.seconds = timer.elapsed();
                    return res;
                }
                image.insert(p.str());
            }
        // coverage: a dominant box weight is in the image exactly when its
        // preimage bipartition fits the size bound
        for (const Weight& w : dominant_box(n, m, weight_box)) {
            auto [lam, mu] = pi_inverse(w);
            bool small = part_size(lam) <= maxsize && part_size(mu) <= maxsize;
            if (image.count(w.str()) != static_cast<size_t>(small)) {
                res.pass = false;
                res.detail = "coverage mismatch at " + w.str();
                res.seconds = timer.elapsed();
                return res;
            }
        }
    }
    res.detail = std::to_string(res.cases) + " bipartitions checked";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult spectral_dimensions(int box11, const std::vector<Weight>& extra) {
    std::vector<Weight> targets;
    for (const Weight& w : dominant_box(1, 1, box11))
        if (is_regular(w)) targets.push_back(w);
    targets.insert(targets.end(), extra.begin(), extra.end());
    CheckResult res = spectral_dimensions(targets);
    res.detail += " (extras: " + weight_list(extra) + ")";
    return res;
}

CheckResult spectral_dimensions(const std::vector<Weight>& targets) {
    Timer timer;
    CheckResult res{"generalized eigenspace dimensions 2^r and module split", true, 0, "", 0};
    for (const Weight& w : targets) {
        ++res.cases;
        GenEigenspace ge = gen_eigenspace(w);
        const int r = static_cast<int>(singular_minus(ge.cls.chi_min).size());
        if (static_cast<int>(ge.vectors.size()) != (1 << r)) {
            res.pass = false;
            res.detail = "dim != 2^r at " + w.str();
            res.seconds = timer.elapsed();
            return res;
        }
        auto dims = spectral_split_dims(ge);
        long total = 0;
        for (int d : dims) total += d;
        if (total != static_cast<long>(ge.space.basis.size())) {
            res.pass = false;
            res.detail = "split does not fill W at " + w.str();
            res.seconds = timer.elapsed();
            return res;
        }
    }
    res.detail = std::to_string(res.cases) + " weights verified";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult dual_number_structure() {
    Timer timer;
    CheckResult res{"image algebra is C[eps]^r with the regular representation", true, 0, "",
                    0};
    std::vector<Weight> targets = {Weight(1, 1, {2, 0}), Weight(1, 1, {0, 0})};
    // box search for an r = 2 class in (2,2)
    bool found = false;
    for (const Weight& w : dominant_box(2, 2, 2)) {
        if (!is_regular(w) || singular_minus(w).size() != 2) continue;
        targets.push_back(w);
        found = true;
        break;
    }
    if (!found) {
        res.pass = false;
        res.detail = "no r=2 class found in the (2,2) box";
        res.seconds = timer.elapsed();
        return res;
    }
    std::ostringstream os;
    for (const Weight& w : targets) {
        ++res.cases;
        LocalAlgebraReport rep = image_algebra(w);
        const int r = rep.r;
        bool ok = rep.dimension == (1 << r) && rep.commutative && rep.local_structure_ok &&
                  rep.cotangent_dim == r && rep.nilpotency_index <= r + 1 &&
                  static_cast<int>(rep.square_zero_generators.size()) == r &&
                  rep.square_free_basis_ok && !rep.cyclic_vector.empty() &&
                  rep.regular_representation_ok;
        if (!ok) {
            res.pass = false;
            res.detail = "algebra profile failed at " + w.str();
            res.seconds = timer.elapsed();
            return res;
        }
        os << w.str() << " r=" << r << " ok; ";
    }
    res.detail = os.str();
    res.seconds = timer.elapsed();
    return res;
}

CheckResult unique_eigenfunctions(int box11, const std::vector<Weight>& extra) {
    Timer timer;
    CheckResult res{"unique joint eigenfunction, L_r J = theta_chi(L_r) J", true, 0, "", 0};
    std::vector<Weight> targets;
    for (const Weight& w : dominant_box(1, 1, box11))
        if (is_regular(w)) targets.push_back(w);
    targets.insert(targets.end(), extra.begin(), extra.end());
    for (const Weight& w : targets) {
        ++res.cases;
        GenEigenspace ge = gen_eigenspace(w);
        LaurentPoly j;
        try {
            j = eigenfunction(ge);  // throws when the joint eigenspace is not a line
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = w.str() + ": " + e.what();
            res.seconds = timer.elapsed();
            return res;
        }
        for (int r = 1; r <= 4; ++r) {
            if (integral_apply(r, j) != j * ge.theta[r - 1]) {
                res.pass = false;
                res.detail = "L_r J != theta J at " + w.str() + ", r=" + std::to_string(r);
                res.seconds = timer.elapsed();
                return res;
            }
        }
    }
    res.detail = std::to_string(res.cases) + " classes have a one-dimensional joint kernel";
    res.seconds = timer.elapsed();
    return res;
}

CheckResult power_sum_generation() {
    Timer timer;
    CheckResult res{"power sums generate the filtered quasi-invariants", true, 0, "", 0};
    using Windows = std::vector<std::vector<Exponent>>;
    auto segment = [](int b) {
        std::vector<Exponent> w;
        for (int t = -b; t <= b; ++t) w.push_back({t, -t});
        return w;
    };
    auto psupport = [](int n, int m, const std::vector<int>& powers) {
        LaurentPoly f = LaurentPoly::one(n, m);
        for (int s : powers) f *= deformed_power_sum(s, n, m);
        return support_members(f);
    };
    // windows are supports of power-sum products (saturated hulls), where
    // the filtered generation statement holds
    Windows w11 = {
        {{0, 0}},
        segment(1),
        segment(2),
        segment(3),
        psupport(1, 1, {1, 1}),
    };
    Windows w21 = {
        {{0, 0, 0}},
        psupport(2, 1, {1, -1}),
        psupport(2, 1, {1, 2}),
        psupport(2, 1, {2, -2}),
        psupport(2, 1, {1, 1, -1}),
    };
    for (const auto& [nm, windows] :
         {std::pair<std::pair<int, int>, Windows>{{1, 1}, w11}, {{2, 1}, w21}}) {
        for (const auto& win : windows) {
            ++res.cases;
            if (!power_sum_generation_check(win, nm.first, nm.second)) {
                res.pass = false;
                res.detail = "span mismatch on a (" + std::to_string(nm.first) + "," +
                             std::to_string(nm.second) + ") window of size " +
                             std::to_string(win.size());
                res.seconds = timer.elapsed();
                return res;
            }
        }
    }
    res.detail = std::to_string(res.cases) + " windows, spans coincide";
    res.seconds = timer.elapsed();
    return res;
}

std::vector<CheckResult> run_acceptance() {
    const NmList nms{{1, 1}, {2, 1}, {2, 2}};
    std::vector<Weight> extra21 = {Weight(2, 1, {1, 0, 0}), Weight(2, 1, {0, 0, 0}),
                                   Weight(2, 1, {0, 0, -1})};
    std::vector<CheckResult> out;
    out.push_back(commutation(nms, 3, 60));
    out.push_back(invariance_support(nms, 3, 60));
    out.push_back(bernoulli_identity(nms, 3, 6));
    out.push_back(equivalence_criterion(nms, 3));
    out.push_back(class_structure(nms, 3));
    out.push_back(bijection(nms, 6, 3));
    out.push_back(spectral_dimensions(2, extra21));
    out.push_back(dual_number_structure());
    out.push_back(unique_eigenfunctions(2, extra21));
    out.push_back(power_sum_generation());
    return out;
}

std::optional<std::string> k_sample_screen(const NmList& nms, int box, int rmax,
                                           const mpq_class& q) {
    for (auto [n, m] : nms)
        for (const Weight& w : dominant_box(n, m, box))
            for (int r = 1; r <= rmax; ++r) {
                mpq_class a, b;
                try {
                    a = b_gen_eval(r, w).eval(q);
                    b = b_gen_geo(r, w).eval(q);
                } catch (const std::domain_error&) {
                    continue;  // pole at the sample point; the exact path decides
                }
                if (a != b)
                    return "numeric mismatch at " + w.str() + ", r=" + std::to_string(r);
            }
    return std::nullopt;
}

} // namespace cmsdef::verify
