#include "polyverify/bounds.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>

#include "polyverify/eisenstein.hpp"

namespace polyverify {

namespace {

// Minimal RAII wrapper; all arithmetic goes through explicit rounding modes.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

mpfr_prec_t prec_of(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.33) + 32;
}

void set_rat(Real& out, const Rat& q, mpfr_rnd_t rnd) {
    mpfr_set_q(out.get(), q.get_mpq_t(), rnd);
}

std::string to_decimal(mpfr_srcptr v, int digits) {
    mpfr_exp_t exp;
    char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += body.substr(0, 1) + "." + body.substr(1) + "e" + std::to_string(exp - 1);
    return out;
}

HighPrec make_result(mpfr_srcptr v, int digits) {
    return {to_decimal(v, digits), mpfr_get_d(v, MPFR_RNDN)};
}

void set_from_dec(Real& out, const std::string& dec, mpfr_rnd_t rnd) {
    mpfr_set_str(out.get(), dec.c_str(), 10, rnd);
}

// Outward (upward) rounding to 3 significant decimal digits.
std::string round_out_3(const HighPrec& x) {
    Real v(256);
    set_from_dec(v, x.dec, MPFR_RNDU);
    mpfr_exp_t exp;
    char* raw = mpfr_get_str(nullptr, &exp, 10, 3, v.get(), MPFR_RNDU);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string out = mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp - 1);
    return out;
}

}  // namespace

std::pair<Rat, Rat> norm_sq_exact_parts(const FormSpec& form) {
    const Int M = form.M;
    const Int N_alpha = form.level();
    const Int D_alpha = form.discriminant();
    const Int MN = M * M * N_alpha;

    Rat inv_euler(1);  // prod (1 - p^-2)
    for (Int p : prime_factors(MN)) inv_euler *= rat(p * p - 1, p * p);

    Rat S(0);
    for (Int d : divisors(MN)) {
        Rat term = rat(euler_phi(MN / d)) * rat(euler_phi(d)) * rat(MN, d);
        Rat ratio = rat(gcd_int(M * M, d), M * M);
        term *= ratio * ratio * ratio * ratio;
        S += term;
    }

    // 2 * 3^6 * M^4 N^2 / prod(1-p^-2) * S * 2 * (27 M^2 N / (D pi) + 16)
    Rat base = rat(2 * 729) * rat(M) * rat(M) * rat(M) * rat(M) * rat(N_alpha) * rat(N_alpha);
    base /= inv_euler;
    base *= S * rat(2);
    Rat A = base * rat(27 * MN, D_alpha);
    Rat B = base * rat(16);
    return {A, B};
}

HighPrec norm_sq_bound(const FormSpec& form, int digits) {
    auto [A, B] = norm_sq_exact_parts(form);
    mpfr_prec_t prec = prec_of(digits);
    Real pi(prec), p4(prec), p5(prec), tA(prec), tB(prec), total(prec);
    // pi rounded down so the quotients round up
    mpfr_const_pi(pi.get(), MPFR_RNDD);
    mpfr_pow_ui(p4.get(), pi.get(), 4, MPFR_RNDD);
    mpfr_pow_ui(p5.get(), pi.get(), 5, MPFR_RNDD);
    set_rat(tA, A, MPFR_RNDU);
    set_rat(tB, B, MPFR_RNDU);
    mpfr_div(tA.get(), tA.get(), p5.get(), MPFR_RNDU);
    mpfr_div(tB.get(), tB.get(), p4.get(), MPFR_RNDU);
    mpfr_add(total.get(), tA.get(), tB.get(), MPFR_RNDU);
    return make_result(total.get(), digits);
}

HighPrec coeff_bound_const(Int level, Int sublevel, const HighPrec& norm_sq, int digits) {
    mpfr_prec_t prec = prec_of(digits);
    Real ns(prec), norm(prec), npow(prec), expo(prec), plocal(prec), acc(prec);
    set_from_dec(ns, norm_sq.dec, MPFR_RNDU);
    mpfr_sqrt(norm.get(), ns.get(), MPFR_RNDU);

    // N^(1 + 2.5e-6)
    mpfr_set_str(expo.get(), "1.0000025", 10, MPFR_RNDU);
    mpfr_set_si(npow.get(), static_cast<long>(level), MPFR_RNDU);
    mpfr_pow(npow.get(), npow.get(), expo.get(), MPFR_RNDU);

    Rat pr(1);
    for (Int p : prime_factors(level)) pr *= rat(p + 1, p);
    set_rat(plocal, pr, MPFR_RNDU);
    mpfr_sqrt(plocal.get(), plocal.get(), MPFR_RNDU);

    mpfr_set_str(acc.get(), "6.95e18", 10, MPFR_RNDU);
    mpfr_mul(acc.get(), acc.get(), norm.get(), MPFR_RNDU);
    mpfr_mul(acc.get(), acc.get(), npow.get(), MPFR_RNDU);
    mpfr_mul(acc.get(), acc.get(), plocal.get(), MPFR_RNDU);
    mpfr_mul_si(acc.get(), acc.get(), static_cast<long>(euler_phi(sublevel)), MPFR_RNDU);
    return make_result(acc.get(), digits);
}

HighPrec crossover_from_const(const HighPrec& coeff_const, Int slope, int digits) {
    mpfr_prec_t prec = prec_of(digits);
    Real c(prec), e(prec);
    set_from_dec(c, coeff_const.dec, MPFR_RNDU);
    mpfr_mul_si(c.get(), c.get(), static_cast<long>(slope), MPFR_RNDU);
    mpfr_set_str(e.get(), "2.5", 10, MPFR_RNDU);
    mpfr_pow(c.get(), c.get(), e.get(), MPFR_RNDU);
    return make_result(c.get(), digits);
}

HighPrec deligne_bound(Int n, int k, int digits) {
    if (n < 1 || k < 2) throw std::domain_error("deligne_bound: need n >= 1, k >= 2");
    mpfr_prec_t prec = prec_of(digits);
    Real v(prec);
    mpfr_set_si(v.get(), static_cast<long>(n), MPFR_RNDU);
    if (k % 2 == 1) {
        mpfr_pow_ui(v.get(), v.get(), static_cast<unsigned long>((k - 1) / 2), MPFR_RNDU);
    } else {
        Real e(prec);
        mpfr_set_si(e.get(), k - 1, MPFR_RNDU);
        mpfr_div_ui(e.get(), e.get(), 2, MPFR_RNDU);
        mpfr_pow(v.get(), v.get(), e.get(), MPFR_RNDU);
    }
    mpfr_mul_si(v.get(), v.get(), static_cast<long>(sigma(n, 0)), MPFR_RNDU);
    return make_result(v.get(), digits);
}

namespace {

HighPrec final_from_crossover(const HighPrec& crossover, int m, int digits) {
    mpfr_prec_t prec = prec_of(digits);
    Real v(prec);
    set_from_dec(v, crossover.dec, MPFR_RNDU);
    mpfr_sub_si(v.get(), v.get(), static_cast<long>(15 * (m - 4) * (m - 4)), MPFR_RNDU);
    mpfr_div_si(v.get(), v.get(), static_cast<long>(8 * (m - 2)), MPFR_RNDU);
    return make_result(v.get(), digits);
}

}  // namespace

BoundReport bound_report(int m, int digits) {
    BoundReport rep;
    rep.m = m;
    FormSpec form = FormSpec::for_m(m);
    rep.M = form.M;
    rep.level = 32 * form.M * form.M;
    rep.slope = eis_headline_slope(m);
    std::tie(rep.norm_sq_A, rep.norm_sq_B) = norm_sq_exact_parts(form);

    rep.norm_sq = norm_sq_bound(form, digits);
    rep.coeff_const = coeff_bound_const(rep.level, form.M, rep.norm_sq, digits);
    rep.crossover = crossover_from_const(rep.coeff_const, rep.slope, digits);
    rep.final_const = final_from_crossover(rep.crossover, m, digits);

    const auto& pub = published_reference().at(m);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", pub.norm_sq);
    HighPrec anchored_norm{buf, pub.norm_sq};
    rep.anchored_coeff_const = coeff_bound_const(rep.level, form.M, anchored_norm, digits);
    HighPrec rounded{round_out_3(rep.anchored_coeff_const), rep.anchored_coeff_const.approx};
    rep.anchored_crossover = crossover_from_const(rounded, rep.slope, digits);
    rep.anchored_final_const = final_from_crossover(rep.anchored_crossover, m, digits);

    // rejected reading: published column treated as a bound on ||f|| itself
    {
        mpfr_prec_t prec = prec_of(digits);
        Real sq(prec);
        set_from_dec(sq, anchored_norm.dec, MPFR_RNDU);
        mpfr_sqr(sq.get(), sq.get(), MPFR_RNDU);
        HighPrec squared = make_result(sq.get(), digits);
        rep.coeff_const_norm_reading = coeff_bound_const(rep.level, form.M, squared, digits);
    }
    return rep;
}

const std::map<int, PublishedRow>& published_reference() {
    static const std::map<int, PublishedRow> table = {
        {7, {8.11e14, 3.41e30, 1.92e82, 4.8e80}},
        {9, {1.03e16, 3.48e31, 8.38e85, 1.5e84}},
        {10, {3.2e16, 9.98e31, 3.41e87, 5.33e85}},
        {11, {6.1e16, 1.52e32, 3.55e88, 4.93e86}},
        {12, {1.49e17, 3.69e32, 4.25e89, 5.31e87}},
        {13, {2.55e17, 6.96e32, 4.57e90, 5.19e88}},
        {14, {5.63e17, 1.09e33, 2.04e91, 2.13e89}},
    };
    return table;
}

}  // namespace polyverify
