#include "cmsdef/quasi.hpp"

#include <stdexcept>

namespace cmsdef {

LaurentPoly dir_derivative(int i, const LaurentPoly& f) {
    if (i < 0 || i >= f.nvars()) throw std::invalid_argument("variable index out of range");
    LaurentPoly d = f.xddx(i);
    if (parity(i, f.n()) == 1) d = d * RatK::k();
    return d;
}

bool is_quasi_invariant(const LaurentPoly& f) {
    if (f.is_zero()) return true;
    if (!sym_invariant(f)) return false;
    const int n = f.n(), m = f.m();
    for (int i = 0; i < n; ++i)
        for (int j = n; j < n + m; ++j) {
            LaurentPoly cond = f.xddx(i) - f.xddx(j) * RatK::k();
            if (!cond.subst_equal(j, i).is_zero()) return false;
        }
    return true;
}

QuasiMap QuasiMap::constant(const LaurentPoly& f) {
    QuasiMap phi;
    phi.n = f.n();
    phi.m = f.m();
    phi.images.assign(f.nvars(), f);
    return phi;
}

QuasiMap QuasiMap::zero(int n, int m) {
    QuasiMap phi;
    phi.n = n;
    phi.m = m;
    phi.images.assign(n + m, LaurentPoly(n, m));
    return phi;
}

bool is_quasi_homomorphism(const QuasiMap& phi) {
    const int n = phi.n, m = phi.m;
    // equivariance on block transposition generators
    auto check_gen = [&](int a, int b) {
        Permutation w = Permutation::transposition(n, m, a, b);
        for (int i = 0; i < n + m; ++i)
            if (phi.images[w.img[i]] != sym_apply(w, phi.images[i])) return false;
        return true;
    };
    for (int i = 0; i + 1 < n; ++i)
        if (!check_gen(i, i + 1)) return false;
    for (int j = n; j + 1 < n + m; ++j)
        if (!check_gen(j, j + 1)) return false;

    for (int i = 0; i < n; ++i)
        for (int j = n; j < n + m; ++j) {
            // b*)  phi(alpha) in (x_i - x_j)
            LaurentPoly diff = phi.images[i] - phi.images[j];
            if (!diff.subst_equal(j, i).is_zero()) return false;
            // a*)  d_alpha phi(v) in (x_i - x_j) on a spanning set of alpha-perp
            auto dalpha_in_ideal = [&](const LaurentPoly& g) {
                LaurentPoly d = g.xddx(i) - g.xddx(j) * RatK::k();
                return d.subst_equal(j, i).is_zero();
            };
            for (int s = 0; s < n + m; ++s) {
                if (s == i || s == j) continue;
                if (!dalpha_in_ideal(phi.images[s])) return false;
            }
            LaurentPoly vperp = phi.images[i] + phi.images[j] * RatK::k_pow(-1);
            if (!dalpha_in_ideal(vperp)) return false;
        }
    return true;
}

QuasiMap moser_apply(const QuasiMap& phi) {
    const int n = phi.n, m = phi.m;
    QuasiMap psi = QuasiMap::zero(n, m);
    for (int i = 0; i < n + m; ++i) {
        LaurentPoly acc = dir_derivative(i, phi.images[i]);
        for (int j = 0; j < n + m; ++j) {
            if (j == i) continue;
            LaurentPoly diff = phi.images[i] - phi.images[j];
            if (diff.is_zero()) continue;
            LaurentPoly q;
            try {
                q = diff.div_exact_diff(i, j);
            } catch (const std::domain_error&) {
                throw std::domain_error("input not a quasi-homomorphism");
            }
            Exponent ei(n + m, 0);
            ei[i] = 1;
            LaurentPoly term = q.shifted(ei);  // x_i (phi_i - phi_j)/(x_i - x_j)
            int e = 1 - parity(j, n);
            acc -= e == 0 ? term : term * RatK::k_pow(e);
        }
        psi.images[i] = std::move(acc);
    }
    return psi;
}

std::vector<LaurentPoly> integral_chain(int rmax, const LaurentPoly& f) {
    if (rmax < 1) throw std::invalid_argument("integral order must be positive");
    const int n = f.n(), m = f.m();
    std::vector<LaurentPoly> out;
    QuasiMap phi = QuasiMap::constant(f);
    for (int r = 1; r <= rmax; ++r) {
        phi = moser_apply(phi);
        LaurentPoly lr(n, m);
        for (int i = 0; i < n + m; ++i) {
            int p = parity(i, n);
            lr += p == 0 ? phi.images[i] : phi.images[i] * RatK::k_pow(-1);
        }
        out.push_back(std::move(lr));
    }
    return out;
}

LaurentPoly integral_apply(int r, const LaurentPoly& f) {
    return integral_chain(r, f).back();
}

LaurentPoly cms2_apply(const LaurentPoly& f) {
    const int n = f.n(), m = f.m();
    LaurentPoly acc(n, m);
    for (int i = 0; i < n + m; ++i) {
        LaurentPoly d2 = f.xddx(i).xddx(i);
        acc += parity(i, n) == 0 ? d2 : d2 * RatK::k();
    }
    auto pole_term = [&](int i, int j, const RatK& cj) {
        // (x_i+x_j)/(x_i-x_j) (x_i d_i - c_j x_j d_j) f, expanded exactly
        LaurentPoly h = f.xddx(i) - f.xddx(j) * cj;
        LaurentPoly q;
        try {
            q = h.div_exact_diff(i, j);
        } catch (const std::domain_error&) {
            throw std::domain_error("input not quasi-invariant");
        }
        Exponent ei(n + m, 0), ej(n + m, 0);
        ei[i] = 1;
        ej[j] = 1;
        return q.shifted(ei) + q.shifted(ej);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc -= pole_term(i, j, RatK(1)) * RatK::k();
    for (int i = n; i < n + m; ++i)
        for (int j = i + 1; j < n + m; ++j)
            acc += pole_term(i, j, RatK(1));
    for (int i = 0; i < n; ++i)
        for (int j = n; j < n + m; ++j)
            acc -= pole_term(i, j, RatK::k());
    return acc;
}

bool commute_check(int r, int s, const LaurentPoly& f) {
    return integral_apply(r, integral_apply(s, f)) == integral_apply(s, integral_apply(r, f));
}

} // namespace cmsdef
