#pragma once

#include <complex>
#include <vector>

#include "polyverify/arith.hpp"

namespace polyverify {

// Coefficients of the nu-th cyclotomic polynomial, ascending degree, monic of
// degree euler_phi(nu). Computed by the Moebius product of (x^d - 1) factors
// with exact binomial division; cached per order, safe for concurrent use.
const std::vector<Int>& cyclotomic_polynomial(Int nu);

// Reduce w (length nu, exponent basis of x^j mod x^nu - 1) modulo the nu-th
// cyclotomic polynomial, in place. Entries at indices >= phi(nu) end up zero.
void reduce_mod_cyclotomic(std::vector<Int>& w, Int nu);

// Integer combination of nu-th roots of unity in the raw exponent basis
// 1, zeta, ..., zeta^(nu-1), not reduced modulo the minimal polynomial.
// This is the working representation in the Gauss-sum kernels; CycNum below
// is the canonical reduced form.
struct ZCyc {
    Int order = 1;
    std::vector<Int> c{0};

    explicit ZCyc(Int nu = 1) : order(nu), c(static_cast<size_t>(nu), 0) {}

    static ZCyc scalar(Int value) {
        ZCyc z(1);
        z.c[0] = value;
        return z;
    }
    static ZCyc monomial(Int nu, Int exponent, Int coeff = 1) {
        ZCyc z(nu);
        z.c[static_cast<size_t>(mod_floor(exponent, nu))] = coeff;
        return z;
    }
};

ZCyc zcyc_coerce(const ZCyc& a, Int order);          // order must be a multiple
ZCyc zcyc_mul(const ZCyc& a, const ZCyc& b);         // result order lcm(a,b)
void zcyc_scale(ZCyc& a, Int s);
void zcyc_rotate(ZCyc& a, Int shift);                // multiply by zeta^shift
bool zcyc_is_zero(const ZCyc& a);                    // as an element of Q(zeta)
bool zcyc_equal(const ZCyc& a, const ZCyc& b);

// Exact element of Q(zeta_nu): canonical coordinates modulo the minimal
// polynomial. coeffs() has length nu with entries at indices >= phi(nu) zero.
class CycNum {
  public:
    CycNum() : order_(1), coeffs_(1, Rat(0)) {}

    // Canonicalizes the given exponent-basis coordinates.
    CycNum(Int order, std::vector<Rat> coeffs);

    static CycNum from_rat(const Rat& q);
    static CycNum from_zcyc(const ZCyc& z, const Rat& scale = Rat(1));

    Int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(Int j) const { return coeffs_[static_cast<size_t>(j)]; }

    bool is_zero() const;
    bool is_rational() const;

    CycNum coerced(Int new_order) const;  // new_order multiple of order()

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a);
    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    friend CycNum operator*(const Rat& s, const CycNum& a);
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const;

  private:
    Int order_;
    std::vector<Rat> coeffs_;
};

CycNum root_of_unity(Int nu, Int j);

// eps(d) for odd d: 1 when d = 1 mod 4, i when d = 3 mod 4.
CycNum eps(Int d);

// Minimal polynomial of zeta_nu (alias for the cached cyclotomic polynomial).
std::vector<Int> min_poly(Int nu);

std::complex<double> embed(const CycNum& x);
std::complex<double> embed(const ZCyc& z);

}  // namespace polyverify
