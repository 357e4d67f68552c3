#include "cmsdef/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "cmsdef/linalg.hpp"

namespace cmsdef {

bool partial_leq(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    long sa = 0, sb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

bool t_less(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    long sa = 0, sb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa != sb) return sa < sb;
    }
    return false;
}

Exponent sorted_blockwise(Exponent e, int n, int m) {
    if (static_cast<int>(e.size()) != n + m) throw std::invalid_argument("dimension mismatch");
    std::sort(e.begin(), e.begin() + n, std::greater<int>());
    std::sort(e.begin() + n, e.end(), std::greater<int>());
    return e;
}

LaurentPoly LaurentPoly::constant(int n, int m, const RatK& c) {
    LaurentPoly f(n, m);
    f.add_term(Exponent(n + m, 0), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(int n, int m, const Exponent& e, const RatK& c) {
    LaurentPoly f(n, m);
    f.add_term(e, c);
    return f;
}

RatK LaurentPoly::coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? RatK(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const RatK& c) {
    if (c.is_zero()) return;
    assert(static_cast<int>(e.size()) == n_ + m_);
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void LaurentPoly::check_dims(const LaurentPoly& g) const {
    if (n_ != g.n_ || m_ != g.m_) throw std::invalid_argument("dimension mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_, m_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
    check_dims(g);
    LaurentPoly r(*this);
    for (const auto& [e, c] : g.t_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const {
    check_dims(g);
    LaurentPoly r(*this);
    for (const auto& [e, c] : g.t_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
    check_dims(g);
    LaurentPoly r(n_, m_);
    Exponent e(n_ + m_);
    for (const auto& [ea, ca] : t_)
        for (const auto& [eb, cb] : g.t_) {
            for (int i = 0; i < n_ + m_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const RatK& c) const {
    LaurentPoly r(n_, m_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = one(n_, m_), base(*this);
    while (e) {
        if (e & 1u) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::xddx(int i) const {
    LaurentPoly r(n_, m_);
    for (const auto& [e, c] : t_)
        if (e[i] != 0) r.t_.emplace(e, c * RatK(e[i]));
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
    LaurentPoly r(n_, m_);
    Exponent e(n_ + m_);
    for (const auto& [ea, c] : t_) {
        for (int i = 0; i < n_ + m_; ++i) e[i] = ea[i] + s[i];
        r.t_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::subst_equal(int j, int i) const {
    LaurentPoly r(n_, m_);
    Exponent e(n_ + m_);
    for (const auto& [ea, c] : t_) {
        e = ea;
        e[i] += e[j];
        e[j] = 0;
        r.add_term(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::div_exact_diff(int i, int j) const {
    if (is_zero()) return *this;
    int vi = 0, vj = 0;
    for (const auto& [e, c] : t_) {
        vi = std::min(vi, e[i]);
        vj = std::min(vj, e[j]);
    }
    // clear negative powers of x_i, x_j; restore the shift on the quotient
    Exponent up(n_ + m_, 0);
    up[i] = -vi;
    up[j] = -vj;
    LaurentPoly f = shifted(up);
    // slice by the degree in x_i
    std::map<int, LaurentPoly> slice;
    int dmax = 0;
    for (const auto& [e, c] : f.t_) {
        auto it = slice.try_emplace(e[i], LaurentPoly(n_, m_)).first;
        Exponent e0(e);
        e0[i] = 0;
        it->second.add_term(e0, c);
        dmax = std::max(dmax, e[i]);
    }
    auto piece = [&](int d) -> LaurentPoly {
        auto it = slice.find(d);
        return it == slice.end() ? LaurentPoly(n_, m_) : it->second;
    };
    Exponent ej(n_ + m_, 0);
    ej[j] = 1;
    // synthetic division by (x_i - x_j), viewing f as a polynomial in x_i
    std::vector<LaurentPoly> q(dmax, LaurentPoly(n_, m_));  // q[d] = coeff of x_i^d
    LaurentPoly carry(n_, m_);
    for (int d = dmax; d >= 1; --d) {
        carry = piece(d) + carry.shifted(ej);
        q[d - 1] = carry;
    }
    LaurentPoly rem = piece(0) + carry.shifted(ej);
    if (!rem.is_zero()) throw std::domain_error("inexact division by (x_i - x_j)");
    LaurentPoly result(n_, m_);
    Exponent back(n_ + m_, 0);
    back[i] = vi;
    back[j] = vj;
    for (int d = 0; d < dmax; ++d) {
        if (q[d].is_zero()) continue;
        Exponent s(back);
        s[i] += d;
        result += q[d].shifted(s);
    }
    return result;
}

const Exponent& LaurentPoly::t_leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
        if (t_less(best->first, it->first)) best = it;
    return best->first;
}

std::vector<Exponent> max_terms(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("zero polynomial has no maximal terms");
    std::vector<Exponent> out;
    for (const auto& [e, c] : f.terms()) {
        bool maximal = true;
        for (const auto& [e2, c2] : f.terms())
            if (e2 != e && partial_leq(e, e2)) { maximal = false; break; }
        if (maximal) out.push_back(e);
    }
    return out;
}

std::vector<Exponent> hull_lattice_points(const std::vector<Exponent>& pts) {
    if (pts.empty()) return {};
    const int d = static_cast<int>(pts[0].size());
    std::vector<int> lo(pts[0]), hi(pts[0]);
    for (const auto& p : pts)
        for (int i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    long cells = 1;
    for (int i = 0; i < d; ++i) {
        cells *= hi[i] - lo[i] + 1;
        if (cells > 2'000'000L) throw std::length_error("hull bounding box too large");
    }
    std::set<Exponent> given(pts.begin(), pts.end());
    std::vector<Exponent> out;
    Exponent p(lo);
    for (;;) {
        if (given.count(p) || in_convex_hull(p, pts)) out.push_back(p);
        int i = d - 1;
        while (i >= 0 && p[i] == hi[i]) p[i] = lo[i], --i;
        if (i < 0) break;
        ++p[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponent> support_members(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("support of the zero polynomial");
    std::vector<Exponent> pts;
    pts.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
    return hull_lattice_points(pts);
}

bool support_contained(const LaurentPoly& g, const LaurentPoly& f) {
    if (g.is_zero()) return true;
    std::vector<Exponent> pts;
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
    for (const auto& [e, c] : g.terms())
        if (!in_convex_hull(e, pts)) return false;
    return true;
}

Permutation Permutation::identity(int n, int m) {
    Permutation w;
    w.n = n;
    w.m = m;
    w.img.resize(n + m);
    std::iota(w.img.begin(), w.img.end(), 0);
    return w;
}

Permutation Permutation::transposition(int n, int m, int a, int b) {
    Permutation w = identity(n, m);
    std::swap(w.img[a], w.img[b]);
    if (!w.block_preserving()) throw std::invalid_argument("transposition crosses blocks");
    return w;
}

Permutation Permutation::compose(const Permutation& o) const {
    Permutation w = identity(n, m);
    for (int i = 0; i < n + m; ++i) w.img[i] = img[o.img[i]];
    return w;
}

bool Permutation::block_preserving() const {
    for (int i = 0; i < n + m; ++i)
        if ((i < n) != (img[i] < n)) return false;
    return true;
}

LaurentPoly sym_apply(const Permutation& w, const LaurentPoly& f) {
    LaurentPoly r(f.n(), f.m());
    Exponent e(f.nvars());
    for (const auto& [ea, c] : f.terms()) {
        for (int i = 0; i < f.nvars(); ++i) e[w.img[i]] = ea[i];
        r.add_term(e, c);
    }
    return r;
}

bool sym_invariant(const LaurentPoly& f) {
    const int n = f.n(), m = f.m();
    for (int i = 0; i + 1 < n; ++i)
        if (sym_apply(Permutation::transposition(n, m, i, i + 1), f) != f) return false;
    for (int j = n; j + 1 < n + m; ++j)
        if (sym_apply(Permutation::transposition(n, m, j, j + 1), f) != f) return false;
    return true;
}

LaurentPoly deformed_power_sum(int s, int n, int m) {
    if (s == 0) throw std::invalid_argument("deformed power sum needs s != 0");
    LaurentPoly f(n, m);
    for (int i = 0; i < n; ++i) {
        Exponent e(n + m, 0);
        e[i] = s;
        f.add_term(e, RatK(1));
    }
    for (int j = n; j < n + m; ++j) {
        Exponent e(n + m, 0);
        e[j] = s;
        f.add_term(e, RatK::k_pow(-1));
    }
    return f;
}

namespace {
// complete homogeneous polynomial of degree t in the block variables
LaurentPoly homogeneous_h(int t, Block block, int n, int m) {
    const int lo = block == Block::even ? 0 : n;
    const int hi = block == Block::even ? n : n + m;
    LaurentPoly r(n, m);
    if (t < 0) return r;
    Exponent e(n + m, 0);
    // enumerate monomials of degree t in vars [lo, hi)
    std::vector<int> stack;
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == hi - 1) {
            e[var] = left;
            r.add_term(e, RatK(1));
            e[var] = 0;
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[var] = d;
            self(self, var + 1, left - d);
        }
        e[var] = 0;
    };
    if (lo == hi) {
        if (t == 0) r.add_term(e, RatK(1));
        return r;
    }
    rec(rec, lo, t);
    return r;
}
} // namespace

LaurentPoly schur_poly(const std::vector<int>& lambda, Block block, int n, int m) {
    const int bsize = block == Block::even ? n : m;
    std::vector<int> lam(lambda);
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (static_cast<int>(lam.size()) > bsize)
        throw std::invalid_argument("partition has more parts than block variables");
    if (lam.empty()) return LaurentPoly::one(n, m);
    const int l = static_cast<int>(lam.size());
    // Jacobi-Trudi: det(h_{lambda_i - i + j})_{i,j=1..l}, Leibniz expansion
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly det(n, m);
    do {
        int sign = 1;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        LaurentPoly prod = LaurentPoly::one(n, m);
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            int deg = lam[i] - (i + 1) + (perm[i] + 1);
            if (deg < 0) { zero = true; break; }
            prod *= homogeneous_h(deg, block, n, m);
        }
        if (!zero) det += sign < 0 ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace cmsdef
