#pragma once

#include "polyverify/arith.hpp"

namespace polyverify {

// Congruence class carrying the support of the Eisenstein coefficients for a
// given polygon index: nonzero coefficients only at n = residue (mod modulus).
struct SupportClass {
    Int modulus;
    Int residue;

    bool contains(Int n) const { return mod_floor(n, modulus) == residue; }
};

// supported m: 7, 9, 10, 11, 12, 13, 14
SupportClass eis_support(int m);

// Closed-form Eisenstein coefficient a_{m,2(m-2),(1,2,4,8)}(n); zero off the
// support class.
Rat eis_coeff(int m, Int n);

// Closed-form lower bound for eis_coeff on the support class; throws when n
// is off the class. For m = 12 this is the exact two-branch valuation bound,
// which drops below the n/1920 headline slope once ord_2(n) >= 9.
Rat eis_lower_bound(int m, Int n);

// Headline linear slope s with a(n) >= n/s used by the bound pipeline.
Int eis_headline_slope(int m);

// s_{m,2(m-2),(1,2,4,8)}(n) - eis_coeff(m, n), both sides exact.
Rat cusp_residual(int m, Int n);

}  // namespace polyverify
