#include "cmsdef/rootsys.hpp"

#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmsdef {

long Weight::total() const {
    return std::accumulate(chi.begin(), chi.end(), 0L);
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n; ++i) {
        if (i) os << ",";
        os << chi[i];
    }
    os << "|";
    for (int j = 0; j < m; ++j) {
        if (j) os << ",";
        os << chi[n + j];
    }
    os << ")";
    return os.str();
}

Weight Weight::parse(std::string_view s, int n, int m) {
    auto fail = [&]() { throw std::invalid_argument("malformed weight: " + std::string(s)); };
    size_t p = 0;
    auto skip = [&]() { while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p; };
    skip();
    if (p >= s.size() || s[p] != '(') fail();
    ++p;
    auto read_block = [&](char stop) {
        std::vector<int> out;
        skip();
        while (p < s.size() && s[p] != stop) {
            size_t q = p;
            if (q < s.size() && (s[q] == '-' || s[q] == '+')) ++q;
            size_t d0 = q;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            if (q == d0) fail();
            out.push_back(std::stoi(std::string(s.substr(p, q - p))));
            p = q;
            skip();
            if (p < s.size() && s[p] == ',') {
                ++p;
                skip();
                if (p < s.size() && s[p] == stop) fail();  // trailing comma
            } else if (p < s.size() && s[p] != stop) {
                fail();
            }
        }
        if (p >= s.size()) fail();
        ++p;  // consume stop
        return out;
    };
    std::vector<int> a = read_block('|');
    std::vector<int> b = read_block(')');
    skip();
    if (p != s.size()) fail();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != m)
        throw std::invalid_argument("weight has wrong block sizes for (n,m): " + std::string(s));
    Exponent chi(a);
    chi.insert(chi.end(), b.begin(), b.end());
    return Weight(n, m, std::move(chi));
}

bool is_dominant(const Weight& w) {
    for (int i = 0; i + 1 < w.n; ++i)
        if (w.chi[i] < w.chi[i + 1]) return false;
    for (int j = w.n; j + 1 < w.n + w.m; ++j)
        if (w.chi[j] < w.chi[j + 1]) return false;
    return true;
}

bool is_regular(const Weight& w) {
    return is_dominant(w) && singular_plus(w).empty();
}

FormVector to_form_vector(const Weight& w) {
    FormVector v;
    v.reserve(w.chi.size());
    for (int c : w.chi) v.emplace_back(c);
    return v;
}

RatK inner(const FormVector& u, const FormVector& v, int n) {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    RatK s(0);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() || v[i].is_zero()) continue;
        RatK t = u[i] * v[i];
        s += static_cast<int>(i) < n ? t : t * RatK::k();
    }
    return s;
}

FormVector rho(int n, int m) {
    FormVector v(n + m, RatK(0));
    RatK half(KPoly(1), KPoly(2));
    for (int i = 1; i <= n; ++i)
        v[i - 1] = half * (RatK::k() * RatK(2 * i - n - 1) - RatK(m));
    for (int j = 1; j <= m; ++j)
        v[n + j - 1] = half * (RatK::k_pow(-1) * RatK(2 * j - m - 1) + RatK(n));
    return v;
}

std::vector<Root> odd_positive_roots(int n, int m) {
    std::vector<Root> out;
    out.reserve(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = n; j < n + m; ++j) out.push_back(Root{i, j});
    return out;
}

FormVector root_vector(const Root& a, int nvars) {
    FormVector v(nvars, RatK(0));
    v[a.i] = RatK(1);
    v[a.j] = RatK(-1);
    return v;
}

RatK root_norm2(const Root& a, int n) {
    RatK pi = parity(a.i, n) == 0 ? RatK(1) : RatK::k();
    RatK pj = parity(a.j, n) == 0 ? RatK(1) : RatK::k();
    return pi + pj;
}

FormVector reflect(const Root& a, const FormVector& v, int n) {
    const int nv = static_cast<int>(v.size());
    FormVector av = root_vector(a, nv);
    RatK c = RatK(2) * inner(v, av, n) / root_norm2(a, n);
    FormVector r(v);
    r[a.i] -= c;
    r[a.j] += c;
    return r;
}

FormVector affine_reflect(const Root& a, const FormVector& v, int n, int m) {
    FormVector rh = rho(n, m);
    FormVector shifted(v);
    for (int i = 0; i < n + m; ++i) shifted[i] += rh[i];
    FormVector r = reflect(a, shifted, n);
    for (int i = 0; i < n + m; ++i) r[i] -= rh[i];
    return r;
}

RatK l_plus(const Weight& w, const Root& a) {
    FormVector v = to_form_vector(w);
    FormVector rh = rho(w.n, w.m);
    for (size_t i = 0; i < v.size(); ++i) v[i] += rh[i];
    RatK half(KPoly(1), KPoly(2));
    return inner(v, root_vector(a, w.n + w.m), w.n) - half * root_norm2(a, w.n);
}

RatK l_minus(const Weight& w, const Root& a) {
    FormVector v = to_form_vector(w);
    FormVector rh = rho(w.n, w.m);
    for (size_t i = 0; i < v.size(); ++i) v[i] += rh[i];
    RatK half(KPoly(1), KPoly(2));
    return inner(v, root_vector(a, w.n + w.m), w.n) + half * root_norm2(a, w.n);
}

std::vector<Root> singular_minus(const Weight& w) {
    std::vector<Root> out;
    for (const Root& a : odd_positive_roots(w.n, w.m))
        if (l_minus(w, a).is_zero()) out.push_back(a);
    return out;
}

std::vector<Root> singular_plus(const Weight& w) {
    std::vector<Root> out;
    for (const Root& a : odd_positive_roots(w.n, w.m))
        if (l_plus(w, a).is_zero()) out.push_back(a);
    return out;
}

std::vector<mpq_class> bernoulli_poly(int r) {
    if (r < 0) throw std::invalid_argument("Bernoulli index must be nonnegative");
    // Bernoulli numbers via sum_{j<=i} C(i+1,j) B_j = 0
    std::vector<mpq_class> bnum(r + 1);
    bnum[0] = 1;
    std::vector<std::vector<mpz_class>> choose(r + 2, std::vector<mpz_class>(r + 2, 0));
    for (int i = 0; i <= r + 1; ++i) {
        choose[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : mpz_class(0));
    }
    for (int i = 1; i <= r; ++i) {
        mpq_class s = 0;
        for (int j = 0; j < i; ++j) s += mpq_class(choose[i + 1][j]) * bnum[j];
        bnum[i] = -s / mpq_class(choose[i + 1][i]);
    }
    // B_r(x) = sum_j C(r,j) B_j x^{r-j}
    std::vector<mpq_class> coeffs(r + 1);  // ascending powers
    for (int j = 0; j <= r; ++j) {
        mpq_class c = mpq_class(choose[r][j]) * bnum[j];
        c.canonicalize();
        coeffs[r - j] = c;
    }
    return coeffs;
}

RatK bernoulli_eval(int r, const RatK& x) {
    auto c = bernoulli_poly(r);
    RatK acc(0);
    for (int d = r; d >= 0; --d) acc = acc * x + RatK(mpq_class(c[d]));
    return acc;
}

namespace {
// sum_i [ B_r(x_i + kk (i-1) + h) - B_r(kk (i-1) + h) ]
RatK bernoulli_block_sum(int r, const std::vector<RatK>& xs, const RatK& kk, const RatK& h) {
    RatK s(0);
    for (size_t i = 0; i < xs.size(); ++i) {
        RatK base = kk * RatK(static_cast<long>(i)) + h;
        if (xs[i].is_zero()) continue;
        s += bernoulli_eval(r, xs[i] + base) - bernoulli_eval(r, base);
    }
    return s;
}
} // namespace

RatK b_gen_eval_at(int r, const FormVector& v, int n, int m) {
    if (r < 1) throw std::invalid_argument("generator index must be positive");
    if (static_cast<int>(v.size()) != n + m) throw std::invalid_argument("dimension mismatch");
    std::vector<RatK> a(v.begin(), v.begin() + n), b(v.begin() + n, v.end());
    RatK even = bernoulli_block_sum(r, a, RatK::k(), RatK(0));
    RatK odd = bernoulli_block_sum(r, b, RatK::k_pow(-1), RatK(static_cast<long>(n)));
    return even + RatK::k_pow(r - 1) * odd;
}

RatK b_gen_eval(int r, const Weight& w) {
    return b_gen_eval_at(r, to_form_vector(w), w.n, w.m);
}

} // namespace cmsdef
