#pragma once

#include <map>
#include <string>
#include <utility>

#include "polyverify/arith.hpp"
#include "polyverify/polygonal.hpp"

namespace polyverify {

// A directed-rounding high-precision value: decimal rendering plus a double
// approximation for tolerance checks. Every lossy step rounds so the value
// stays an upper bound of the exact expression.
struct HighPrec {
    std::string dec;
    double approx = 0.0;
};

// Exact rational pair (A, B) with the Petersson norm-square bound equal to
// A/pi^5 + B/pi^4: the finite divisor sum evaluated in exact arithmetic, pi
// factored out.
std::pair<Rat, Rat> norm_sq_exact_parts(const FormSpec& form);

// Upper bound for the norm square, evaluated at `digits` decimal digits.
HighPrec norm_sq_bound(const FormSpec& form, int digits = 60);

// Coefficient-bound constant c with |b(n)| <= c n^(3/5):
//   6.95e18 * sqrt(norm_sq) * N^(1 + 2.5e-6) * prod_{p|N}(1 + 1/p)^(1/2) * phi(L).
HighPrec coeff_bound_const(Int level, Int sublevel, const HighPrec& norm_sq, int digits = 60);

// Smallest B with n/slope > c n^(3/5) for n >= B, i.e. (slope * c)^(5/2),
// rounded outward.
HighPrec crossover_from_const(const HighPrec& coeff_const, Int slope, int digits = 60);

// sigma_0(n) * n^((k-1)/2), rounded up.
HighPrec deligne_bound(Int n, int k, int digits = 60);

struct BoundReport {
    int m = 0;
    Int M = 0;
    Int level = 0;      // 32 M^2
    Int slope = 0;      // a(n) >= n / slope on the support class
    Rat norm_sq_A, norm_sq_B;

    // self-contained pipeline from the exact divisor sum
    HighPrec norm_sq;
    HighPrec coeff_const;
    HighPrec crossover;
    HighPrec final_const;

    // pipeline anchored at the published norm-square bound (the published
    // column read as a bound on ||f||^2), each stage consuming the previous
    // stage outward-rounded to 3 significant digits
    HighPrec anchored_coeff_const;
    HighPrec anchored_crossover;
    HighPrec anchored_final_const;

    // the rejected reading (published column as a bound on ||f|| itself);
    // kept for audit, off by ~7 orders of magnitude
    HighPrec coeff_const_norm_reading;
};

BoundReport bound_report(int m, int digits = 60);

// Published reference values for the seven rows: norm-square bound,
// coefficient-bound constant, crossover bound, final constant.
struct PublishedRow {
    double norm_sq;
    double coeff_const;
    double crossover;
    double final_const;
};
const std::map<int, PublishedRow>& published_reference();

}  // namespace polyverify
