#ifndef CMSDEF_RATK_HPP
#define CMSDEF_RATK_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cmsdef {

/* Dense integer-coefficient polynomial in the formal parameter k.
 * Invariant: no trailing zero coefficients; the zero polynomial has an
 * empty coefficient vector.  k is never specialised to a number inside
 * the library, so "k not rational / not algebraic" holds identically.
 */
class KPoly {
public:
    KPoly() = default;
    KPoly(long v) { if (v != 0) c_.emplace_back(v); }
    KPoly(const mpz_class& v) { if (v != 0) c_.push_back(v); }
    explicit KPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static KPoly variable();                       // k
    static KPoly monomial(const mpz_class& c, int e);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;
    int valuation() const;                         // lowest nonzero power, -1 for 0
    bool is_monomial() const;

    KPoly operator-() const;
    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly& operator+=(const KPoly& o) { *this = *this + o; return *this; }
    KPoly& operator-=(const KPoly& o) { *this = *this - o; return *this; }
    KPoly& operator*=(const KPoly& o) { *this = *this * o; return *this; }
    bool operator==(const KPoly& o) const { return c_ == o.c_; }
    bool operator!=(const KPoly& o) const { return c_ != o.c_; }

    KPoly divexact(const KPoly& d) const;          // throws if not divisible
    static KPoly gcd(const KPoly& a, const KPoly& b);
    mpz_class content() const;                     // gcd of coefficients, >= 0
    KPoly pow(unsigned e) const;
    mpq_class eval(const mpq_class& k0) const;

    std::string str() const;                       // "2*k^3-k+5"
    static KPoly parse(std::string_view s);

private:
    std::vector<mpz_class> c_;
    void trim();
};

/* Element of the field Q(k): quotient of two KPoly in canonical form.
 * Invariants: den != 0, gcd(num, den) = 1 (integer content included),
 * den has positive leading coefficient.  Equality of values is equality
 * of representations.
 */
class RatK {
public:
    RatK() : num_(), den_(1) {}
    RatK(long v) : num_(v), den_(1) {}
    RatK(const mpz_class& v) : num_(v), den_(1) {}
    RatK(const mpq_class& q);
    RatK(const KPoly& p) : num_(p), den_(1) {}
    RatK(KPoly num, KPoly den);                    // normalizes

    static RatK k() { return RatK(KPoly::variable()); }
    static RatK k_pow(int e);                      // k^e, e may be negative

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatK operator-() const;
    RatK operator+(const RatK& o) const;
    RatK operator-(const RatK& o) const;
    RatK operator*(const RatK& o) const;
    RatK operator/(const RatK& o) const;           // throws on division by zero
    RatK& operator+=(const RatK& o) { *this = *this + o; return *this; }
    RatK& operator-=(const RatK& o) { *this = *this - o; return *this; }
    RatK& operator*=(const RatK& o) { *this = *this * o; return *this; }
    RatK& operator/=(const RatK& o) { *this = *this / o; return *this; }
    bool operator==(const RatK& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatK& o) const { return !(*this == o); }

    RatK inverse() const;
    mpq_class eval(const mpq_class& k0) const;     // throws "pole" at zeros of den

    std::string str() const;                       // "(num)/(den)"
    static RatK parse(std::string_view s);

private:
    KPoly num_, den_;
    void normalize();
};

inline RatK operator*(long a, const RatK& b) { return RatK(a) * b; }

} // namespace cmsdef

#endif
