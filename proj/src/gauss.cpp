#include "polyverify/gauss.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace polyverify {

namespace {

Int pow2(Int e) { return Int(1) << e; }

struct QuadCache {
    std::shared_mutex mtx;
    std::map<Int, std::unique_ptr<ZCyc>> table;
};

QuadCache& quad_cache() {
    static QuadCache cache;
    return cache;
}

}  // namespace

const ZCyc& quad_gauss_cached(Int c) {
    if (c < 1 || c % 2 == 0) throw std::domain_error("quad_gauss_cached: need odd c");
    auto& cache = quad_cache();
    {
        std::shared_lock lock(cache.mtx);
        auto it = cache.table.find(c);
        if (it != cache.table.end()) return *it->second;
    }
    auto vec = std::make_unique<ZCyc>(c);
    for (Int l = 0; l < c; ++l) ++vec->c[static_cast<size_t>(l * l % c)];
    std::unique_lock lock(cache.mtx);
    auto [it, inserted] = cache.table.emplace(c, std::move(vec));
    return *it->second;
}

ZCyc gauss_direct_z(Int a, Int b, Int c) {
    if (c < 1) throw std::domain_error("gauss_direct: modulus must be positive");
    a = mod_floor(a, c);
    b = mod_floor(b, c);
    ZCyc out(c);
    Int e = 0;  // a*l^2 + b*l at l = 0
    for (Int l = 0; l < c; ++l) {
        ++out.c[static_cast<size_t>(e)];
        e += a * (2 * l + 1) + b;  // step to l+1
        e %= c;
    }
    return out;
}

CycNum gauss_direct(const GaussSumSpec& spec) {
    return CycNum::from_zcyc(gauss_direct_z(spec.a, spec.b, spec.c));
}

namespace {

// G(a,b;c) for odd c, gcd(a,c)=1:
//   eps_c sqrt(c) (a|c) zeta_c^(-[4a]_c b^2) = (a|c) G(1,0;c) zeta_c^(-[4a]_c b^2)
ZCyc eval_odd_coprime(Int a, Int b, Int c) {
    if (c == 1) return ZCyc::scalar(1);
    a = mod_floor(a, c);
    b = mod_floor(b, c);
    ZCyc out = quad_gauss_cached(c);
    Int shift = mod_floor(-mod_inverse(4 * a % c, c) * (b * b % c), c);
    zcyc_rotate(out, shift);
    if (kronecker(a, c) == -1) zcyc_scale(out, -1);
    return out;
}

// G(a,b;2^r) for odd a, r >= 1. Vanishes for odd b when 4 | c; for r >= 2 and
// even b equals 2^(r/2) (1+i) (-2^r|a) eps_a zeta_{2^r}^(-[a] b^2 / 4).
// Everything stays inside Q(zeta_{2^r}): i = zeta^(2^r/4), and for odd r the
// prefactor folds into 2^((r+1)/2) zeta_8 with zeta_8 = zeta^(2^r/8).
ZCyc eval_two_power(Int a, Int b, Int r) {
    Int m = pow2(r);
    a = mod_floor(a, m);
    b = mod_floor(b, m);
    if (r == 1) return gauss_direct_z(a, b, 2);
    if (b % 2 == 1) return ZCyc(1);  // zero
    Int t = mod_floor(-mod_inverse(a, m) * ((b / 2) * (b / 2) % m), m);
    ZCyc out(m);
    if (r % 2 == 0) {
        Int w = pow2(r / 2);
        out.c[static_cast<size_t>(t)] = w;
        out.c[static_cast<size_t>(mod_floor(t + m / 4, m))] = w;
    } else {
        Int w = pow2((r + 1) / 2);
        out.c[static_cast<size_t>(mod_floor(t + m / 8, m))] = w;
    }
    if (mod_floor(a, 4) == 3) zcyc_rotate(out, m / 4);  // eps_a = i
    if (kronecker(-m, a) == -1) zcyc_scale(out, -1);
    return out;
}

}  // namespace

ZCyc gauss_eval_z(Int a, Int b, Int c) {
    if (c < 1) throw std::domain_error("gauss_eval: modulus must be positive");
    a = mod_floor(a, c);
    b = mod_floor(b, c);
    Int g = a == 0 ? c : gcd_int(a, c);
    if (b % g != 0) return ZCyc(1);  // zero
    a /= g;
    b /= g;
    Int cc = c / g;
    ZCyc out;
    if (cc == 1) {
        out = ZCyc::scalar(1);
    } else {
        auto [kappa, k0] = two_adic_split(cc);
        if (kappa == 0) {
            out = eval_odd_coprime(a, b, cc);
        } else if (k0 == 1) {
            out = eval_two_power(a, b, kappa);
        } else {
            Int m = pow2(kappa);
            ZCyc odd = eval_odd_coprime(a % k0 * (m % k0) % k0, b % k0, k0);
            ZCyc two = eval_two_power(a % m * (k0 % m) % m, b % m, kappa);
            out = zcyc_mul(odd, two);
        }
    }
    zcyc_scale(out, g);
    return out;
}

CycNum gauss_eval(const GaussSumSpec& spec) {
    return CycNum::from_zcyc(gauss_eval_z(spec.a, spec.b, spec.c));
}

SpecialSpec SpecialSpec::make(Int h, Int k, Int l, Int r, Int M) {
    if (k < 1) throw std::domain_error("SpecialSpec: k must be positive");
    if (M < 1) throw std::domain_error("SpecialSpec: M must be positive");
    if (l < 0) throw std::domain_error("SpecialSpec: l must be nonnegative");
    if (gcd_int(mod_floor(h, k), k) != 1)
        throw std::domain_error("SpecialSpec: h, k must be coprime");
    if (r == 0) throw std::domain_error("SpecialSpec: r must be nonzero");
    Int g = gcd_int(M, std::abs(r));
    if (g != 1 && g != 2 && g != 4)
        throw std::domain_error("SpecialSpec: gcd(M, r) must be 1, 2 or 4");
    SpecialSpec s{};
    s.h = h;
    s.k = k;
    s.l = l;
    s.r = r;
    s.M = M;
    auto ks = two_adic_split(k);
    s.kappa = ks.valuation;
    s.k0 = ks.odd_part;
    auto ms = two_adic_split(M);
    s.mu = ms.valuation;
    s.M0 = ms.odd_part;
    auto rs = two_adic_split(std::abs(r));
    s.rho = rs.valuation;
    s.r0 = r < 0 ? -rs.odd_part : rs.odd_part;
    if (s.rho > s.mu) throw std::domain_error("SpecialSpec: need ord_2(r) <= ord_2(M)");
    s.g0 = gcd_int(s.M0, s.k0);
    s.g1 = gcd_int(s.g0, s.k0 / s.g0);
    s.delta = std::min<Int>(l + 2 * s.rho, s.kappa);
    return s;
}

ZCyc gauss_special_z(const SpecialSpec& s) {
    if (s.g1 != 1 || s.rho < std::min<Int>(s.mu, s.kappa - s.l - s.mu) - 1)
        return ZCyc(1);  // zero

    const Int k = s.k, g0 = s.g0;
    const Int d = s.k0 / g0;  // odd, coprime to g0

    if (s.kappa <= s.l + 2 * s.mu || (s.kappa == s.l + 2 * s.mu + 1 && s.rho == s.mu - 1)) {
        // sqrt(k g0) 2^(kappa/2) = 2^kappa g0 eps_d^{-1} G(1,0;d); the eps_d
        // of the formula cancels against eps_d^{-1}, leaving
        //   2^kappa g0 (2^(l+kappa) h g0 | d) G(1,0;d) zeta_{2^(kappa-delta) g0}^E.
        ZCyc out = d == 1 ? ZCyc::scalar(1) : quad_gauss_cached(d);
        out = zcyc_coerce(out, k);
        Int mod = pow2(s.kappa - s.delta) * g0;
        Int expo = mod_floor(s.h, mod) * mod_floor(s.r0 * s.r0, mod) % mod *
                   (pow2(s.l + 2 * s.rho - s.delta) % mod) % mod * mod_inverse(d % mod, mod) % mod;
        zcyc_rotate(out, expo * (k / mod));
        int sym = kronecker(s.h, d) * kronecker(g0, d);
        if ((s.l + s.kappa) % 2 == 1) sym *= kronecker(2, d);
        if (sym == 0) throw std::logic_error("gauss_special: unexpected vanishing symbol");
        zcyc_scale(out, sym * pow2(s.kappa) * g0);
        return out;
    }

    if (s.kappa >= s.l + 2 * s.mu + 2 && s.rho == s.mu) {
        // sqrt(k g0) = 2^(kappa/2) g0 eps_d^{-1} G(1,0;d); assemble
        //   2^((kappa+l+2mu)/2) (1+i) eps_{h g0} eps_d^{-1}
        //   (-2^(l+kappa) d | h g0) g0 G(1,0;d) zeta_{g0}^E
        // inside Q(zeta_k): 4 | k always here, 8 | k whenever kappa+l is odd.
        ZCyc out = d == 1 ? ZCyc::scalar(1) : quad_gauss_cached(d);
        out = zcyc_coerce(out, k);
        Int expo = mod_floor(s.h, g0) * mod_floor(s.r0 * s.r0, g0) % g0 *
                   mod_inverse(pow2(s.kappa - s.l - 2 * s.mu) % g0 * (d % g0) % g0, g0) % g0;
        zcyc_rotate(out, expo * (k / g0));

        Int hg0 = s.h * g0;
        int sym = kronecker(-1, hg0) * kronecker(d, hg0);
        if ((s.l + s.kappa) % 2 == 1) sym *= kronecker(2, hg0);
        if (sym == 0) throw std::logic_error("gauss_special: unexpected vanishing symbol");

        Int se = s.kappa + s.l + 2 * s.mu;
        ZCyc unit(k);
        Int weight;
        if (se % 2 == 0) {
            weight = pow2(se / 2);
            unit.c[0] = 1;
            unit.c[static_cast<size_t>(k / 4)] = 1;  // 1 + i
        } else {
            weight = pow2((se + 1) / 2);
            unit.c[static_cast<size_t>(k / 8)] = 1;  // 2^(1/2)(1+i) = 2 zeta_8 folded in
        }
        if (mod_floor(hg0, 4) == 3) zcyc_rotate(unit, k / 4);  // eps_{h g0} = i
        if (d > 1 && mod_floor(d, 4) == 3) zcyc_rotate(unit, 3 * (k / 4));  // eps_d^{-1} = -i
        out = zcyc_mul(out, unit);
        zcyc_scale(out, sym * weight * g0);
        return out;
    }

    return ZCyc(1);  // remaining combinations vanish
}

CycNum gauss_special(const SpecialSpec& s) { return CycNum::from_zcyc(gauss_special_z(s)); }

bool scaled_equal(const ScaledZCyc& a, const ScaledZCyc& b) { return a.value() == b.value(); }

ScaledZCyc theta_cusp_growth_z(Int h, Int k, const FormSpec& form) {
    if (k < 1) throw std::domain_error("theta_cusp_growth: k must be positive");
    if (gcd_int(mod_floor(h, k), k) != 1)
        throw std::domain_error("theta_cusp_growth: h, k must be coprime");
    Int prod_alpha = 1;
    for (Int a : form.alpha) prod_alpha *= a;
    if (!is_square(prod_alpha))
        throw std::domain_error("theta_cusp_growth: prod(alpha) must be a perfect square");
    Int sq = isqrt(prod_alpha);

    const Int hk = mod_floor(h, k);
    const Int rk = mod_floor(form.r, k);
    const Int Mk = mod_floor(form.M, k);
    ZCyc vec = ZCyc::scalar(1);
    for (Int a : form.alpha) {
        Int ak = mod_floor(a, k);
        Int phase = ak * hk % k * (rk * rk % k) % k;
        ZCyc factor = gauss_eval_z(ak * hk % k * (Mk * Mk % k) % k,
                                   2 * ak % k * hk % k * rk % k * Mk % k, k);
        factor = zcyc_mul(factor, ZCyc::monomial(k, phase));
        vec = zcyc_mul(vec, factor);
    }
    Rat scale = rat(-1, 4 * sq);
    scale /= rat(k) * rat(k);
    scale /= rat(form.M) * rat(form.M) * rat(form.M) * rat(form.M);
    return {scale, std::move(vec)};
}

CycNum theta_cusp_growth(Int h, Int k, const FormSpec& form) {
    return theta_cusp_growth_z(h, k, form).value();
}

ScaledZCyc theta_cusp_growth_1248_z(Int h, Int k, Int r, Int M) {
    if (k < 1) throw std::domain_error("theta_cusp_growth_1248: k must be positive");
    if (M < 1) throw std::domain_error("theta_cusp_growth_1248: M must be positive");
    if (gcd_int(mod_floor(h, k), k) != 1)
        throw std::domain_error("theta_cusp_growth_1248: h, k must be coprime");
    // the theta series depends on r mod M only; shift into 0 < r <= M with
    // ord_2(r) <= ord_2(M)
    r = mod_floor(r, M);
    if (r == 0) r = M;
    auto ms = two_adic_split(M);
    if (two_adic_split(r).valuation > ms.valuation) r += M;
    Int g = gcd_int(M, r);
    if (g != 1 && g != 2 && g != 4)
        throw std::domain_error("theta_cusp_growth_1248: gcd(M, r) must be 1, 2 or 4");

    auto ks = two_adic_split(k);
    Int kappa = ks.valuation, k0 = ks.odd_part;
    Int mu = ms.valuation, M0 = ms.odd_part;
    auto rs = two_adic_split(r);
    Int rho = rs.valuation, r0 = rs.odd_part;
    Int g0 = gcd_int(M0, k0);
    Int g1 = gcd_int(g0, k0 / g0);

    if (g1 != 1 || rho < std::min(mu, kappa - mu) - 1) return {Rat(0), ZCyc(1)};

    Int delta0 = std::min(kappa, 2 * rho);
    if (kappa <= 2 * mu || (kappa == 2 * mu + 1 && rho == mu - 1)) {
        Int mod = pow2(kappa - delta0) * g0;
        Int expo = mod_floor(h, mod) * (r0 * r0 % mod) % mod * (pow2(2 * rho - delta0) % mod) %
                   mod * 15 % mod * mod_inverse(k0 / g0 % mod, mod) % mod;
        Int e = 2 * kappa - 4 * mu - 5;
        Rat scale = e >= 0 ? rat(-pow2(e)) : rat(-1, pow2(-e));
        scale *= rat(g0 * g0, M0 * M0 * M0 * M0);
        return {scale, ZCyc::monomial(mod, expo)};
    }
    if (kappa >= 2 * mu + 5 && rho == mu) {
        Int expo = mod_floor(h, g0) * (r0 * r0 % g0) % g0 * 15 % g0 *
                   mod_inverse(pow2(kappa - 2 * mu) % g0 * (k0 / g0 % g0) % g0, g0) % g0;
        return {rat(g0 * g0, M0 * M0 * M0 * M0), ZCyc::monomial(g0, expo)};
    }
    return {Rat(0), ZCyc(1)};
}

CycNum theta_cusp_growth_1248(Int h, Int k, Int r, Int M) {
    return theta_cusp_growth_1248_z(h, k, r, M).value();
}

}  // namespace polyverify
