#pragma once

#include "polyverify/cyclotomic.hpp"
#include "polyverify/polygonal.hpp"

namespace polyverify {

// G(a,b;c) = sum over l mod c of zeta_c^(a l^2 + b l).
struct GaussSumSpec {
    Int a = 0;
    Int b = 0;
    Int c = 1;
};

// Parameters of the phase-twisted sums zeta_k^(2^l h r^2) G(2^l h M^2, 2^(l+1) h r M; k)
// together with their 2-adic bookkeeping.
struct SpecialSpec {
    Int h, k, l, r, M;
    int kappa;
    Int k0;
    int mu;
    Int M0;
    int rho;
    Int r0;
    Int g0, g1;
    Int delta;  // min(l + 2 rho, kappa)

    // Validates gcd(h,k)=1, gcd(M,r) in {1,2,4}, rho <= mu.
    static SpecialSpec make(Int h, Int k, Int l, Int r, Int M);
};

// Defining summation, O(c). The oracle everything else is checked against.
ZCyc gauss_direct_z(Int a, Int b, Int c);
CycNum gauss_direct(const GaussSumSpec& spec);

// Closed-form evaluator: strips gcd, splits odd/2-power parts, evaluates each
// by the classical formulas, falls back to direct summation for the 2-term
// modulus. Result lives in Q(zeta_c) and equals gauss_direct exactly.
ZCyc gauss_eval_z(Int a, Int b, Int c);
CycNum gauss_eval(const GaussSumSpec& spec);

// Cached quadratic vector G(1,0;c) for odd c, as a ZCyc of order c.
const ZCyc& quad_gauss_cached(Int c);

// Three-branch closed form for the phase-twisted special sums.
ZCyc gauss_special_z(const SpecialSpec& spec);
CycNum gauss_special(const SpecialSpec& spec);

// A cusp-growth value: exact rational scale times an integer root-of-unity
// combination. Kept factored so sweep kernels stay in 64-bit integers.
struct ScaledZCyc {
    Rat scale;
    ZCyc vec;

    CycNum value() const { return CycNum::from_zcyc(vec, scale); }
    bool is_zero() const { return scale == 0 || zcyc_is_zero(vec); }
};

bool scaled_equal(const ScaledZCyc& a, const ScaledZCyc& b);

// -lim z^2 Theta_{r,M,alpha}(h/k + iz/k): product of four twisted Gauss sums
// over the weights, divided by 4 k^2 M^4 sqrt(prod alpha). Requires
// prod(alpha) to be a perfect square so the value stays cyclotomic.
ScaledZCyc theta_cusp_growth_z(Int h, Int k, const FormSpec& form);
CycNum theta_cusp_growth(Int h, Int k, const FormSpec& form);

// Same limit for alpha = (1,2,4,8) by the three-branch closed form in the
// 2-adic data of (r, M, k). Enforces ord_2(r) <= ord_2(M) by shifting r by M.
ScaledZCyc theta_cusp_growth_1248_z(Int h, Int k, Int r, Int M);
CycNum theta_cusp_growth_1248(Int h, Int k, Int r, Int M);

}  // namespace polyverify
