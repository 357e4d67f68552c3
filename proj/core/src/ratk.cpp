#include "cmsdef/ratk.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmsdef {

void KPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

KPoly KPoly::variable() {
    KPoly p;
    p.c_ = {mpz_class(0), mpz_class(1)};
    return p;
}

KPoly KPoly::monomial(const mpz_class& c, int e) {
    KPoly p;
    if (c != 0) {
        p.c_.assign(e + 1, mpz_class(0));
        p.c_[e] = c;
    }
    return p;
}

const mpz_class& KPoly::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const mpz_class& KPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

int KPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

bool KPoly::is_monomial() const {
    if (is_zero()) return false;
    return valuation() == degree();
}

KPoly KPoly::operator-() const {
    KPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

KPoly KPoly::operator+(const KPoly& o) const {
    KPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

KPoly KPoly::operator-(const KPoly& o) const {
    KPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

KPoly KPoly::operator*(const KPoly& o) const {
    if (is_zero() || o.is_zero()) return KPoly();
    KPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

KPoly KPoly::divexact(const KPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero in Q(k)");
    if (is_zero()) return KPoly();
    if (degree() < d.degree()) throw std::domain_error("inexact polynomial division");
    KPoly rem(*this);
    std::vector<mpz_class> q(degree() - d.degree() + 1, mpz_class(0));
    for (int i = rem.degree(); i >= d.degree() && !rem.is_zero(); i = rem.degree()) {
        mpz_class qi, r0;
        mpz_tdiv_qr(qi.get_mpz_t(), r0.get_mpz_t(), rem.c_[i].get_mpz_t(), d.leading().get_mpz_t());
        if (r0 != 0) throw std::domain_error("inexact polynomial division");
        int sh = i - d.degree();
        q[sh] = qi;
        for (int j = 0; j <= d.degree(); ++j)
            rem.c_[sh + j] -= qi * d.c_[j];
        rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return KPoly(std::move(q));
}

mpz_class KPoly::content() const {
    mpz_class g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {
// pseudo-remainder of a by b (b != 0, deg a >= deg b)
KPoly prem(KPoly a, const KPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int sh = a.degree() - db;
        mpz_class lc = a.leading();
        a = a * KPoly(b.leading()) - b * KPoly::monomial(lc, sh);
    }
    return a;
}
} // namespace

KPoly KPoly::gcd(const KPoly& a, const KPoly& b) {
    if (a.is_zero() && b.is_zero()) return KPoly();
    if (a.is_zero()) return b.leading() > 0 ? b : -b;
    if (b.is_zero()) return a.leading() > 0 ? a : -a;
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    // monomial fast path: gcd with c*k^e needs only valuations and contents
    if (a.is_monomial() || b.is_monomial()) {
        int v = std::min(a.valuation(), b.valuation());
        return monomial(cg, v);
    }
    KPoly A = a.divexact(KPoly(a.content()));
    KPoly B = b.divexact(KPoly(b.content()));
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        KPoly R = prem(A, B);
        if (!R.is_zero()) R = R.divexact(KPoly(R.content()));
        A = B;
        B = R;
    }
    if (A.leading() < 0) A = -A;
    return A * KPoly(cg);
}

KPoly KPoly::pow(unsigned e) const {
    KPoly r(1), base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

mpq_class KPoly::eval(const mpq_class& k0) const {
    mpq_class r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * k0 + mpq_class(*it);
    return r;
}

std::string KPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "k";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {
void skip_ws(std::string_view s, size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}
} // namespace

KPoly KPoly::parse(std::string_view s) {
    KPoly r;
    size_t p = 0;
    skip_ws(s, p);
    bool any = false;
    while (p < s.size()) {
        int sign = 1;
        skip_ws(s, p);
        while (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -sign;
            ++p;
            skip_ws(s, p);
        }
        if (p >= s.size()) break;
        mpz_class c(1);
        bool have_num = false;
        if (std::isdigit(static_cast<unsigned char>(s[p]))) {
            size_t q = p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            c = mpz_class(std::string(s.substr(p, q - p)));
            p = q;
            have_num = true;
            skip_ws(s, p);
            if (p < s.size() && s[p] == '*') { ++p; skip_ws(s, p); }
        }
        int e = 0;
        if (p < s.size() && s[p] == 'k') {
            ++p;
            e = 1;
            skip_ws(s, p);
            if (p < s.size() && s[p] == '^') {
                ++p;
                skip_ws(s, p);
                size_t q = p;
                while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
                if (q == p) throw std::invalid_argument("bad exponent in k-polynomial");
                e = std::stoi(std::string(s.substr(p, q - p)));
                p = q;
            }
        } else if (!have_num) {
            throw std::invalid_argument("bad term in k-polynomial: " + std::string(s));
        }
        r += monomial(sign * c, e);
        any = true;
        skip_ws(s, p);
    }
    if (!any) throw std::invalid_argument("empty k-polynomial");
    return r;
}

/* ---------------------------------------------------------------- RatK */

RatK::RatK(const mpq_class& q) : num_(mpz_class(q.get_num())), den_(mpz_class(q.get_den())) {
    normalize();
}

RatK::RatK(KPoly num, KPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatK::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero in Q(k)");
    if (num_.is_zero()) {
        den_ = KPoly(1);
        return;
    }
    if (!den_.is_one()) {
        KPoly g = KPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatK RatK::k_pow(int e) {
    if (e >= 0) return RatK(KPoly::variable().pow(static_cast<unsigned>(e)));
    RatK r;
    r.num_ = KPoly(1);
    r.den_ = KPoly::variable().pow(static_cast<unsigned>(-e));
    return r;
}

RatK RatK::operator-() const {
    RatK r(*this);
    r.num_ = -r.num_;
    return r;
}

RatK RatK::operator+(const RatK& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatK(num_ + o.num_, den_);
    return RatK(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatK RatK::operator-(const RatK& o) const {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatK(num_ - o.num_, den_);
    return RatK(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatK RatK::operator*(const RatK& o) const {
    if (is_zero() || o.is_zero()) return RatK();
    // cross-cancel before multiplying to keep operands reduced
    KPoly g1 = KPoly::gcd(num_, o.den_);
    KPoly g2 = KPoly::gcd(o.num_, den_);
    KPoly n = num_.divexact(g1) * o.num_.divexact(g2);
    KPoly d = den_.divexact(g2) * o.den_.divexact(g1);
    RatK r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatK RatK::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(k)");
    RatK r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatK RatK::operator/(const RatK& o) const {
    return *this * o.inverse();
}

mpq_class RatK::eval(const mpq_class& k0) const {
    mpq_class d = den_.eval(k0);
    if (d == 0) throw std::domain_error("pole: denominator vanishes at k0");
    mpq_class r = num_.eval(k0) / d;
    r.canonicalize();
    return r;
}

std::string RatK::str() const {
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatK RatK::parse(std::string_view s) {
    // accepted grammar: "(num)/(den)" | "num"  with num, den k-polynomials
    size_t p = 0;
    skip_ws(s, p);
    if (p < s.size() && s[p] == '(') {
        int depth = 0;
        size_t start = p;
        size_t i = p;
        for (; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') {
                --depth;
                if (depth == 0) break;
            }
        }
        if (i >= s.size()) throw std::invalid_argument("unbalanced parentheses in Q(k) literal");
        std::string_view nums = s.substr(start + 1, i - start - 1);
        size_t q = i + 1;
        skip_ws(s, q);
        if (q >= s.size()) return RatK(KPoly::parse(nums));
        if (s[q] != '/') throw std::invalid_argument("expected '/' in Q(k) literal");
        ++q;
        skip_ws(s, q);
        if (q >= s.size() || s[q] != '(') throw std::invalid_argument("expected '(' after '/'");
        size_t dstart = q;
        int depth2 = 0;
        size_t j = q;
        for (; j < s.size(); ++j) {
            if (s[j] == '(') ++depth2;
            if (s[j] == ')') {
                --depth2;
                if (depth2 == 0) break;
            }
        }
        if (j >= s.size()) throw std::invalid_argument("unbalanced parentheses in Q(k) literal");
        std::string_view dens = s.substr(dstart + 1, j - dstart - 1);
        return RatK(KPoly::parse(nums), KPoly::parse(dens));
    }
    return RatK(KPoly::parse(s));
}

} // namespace cmsdef
