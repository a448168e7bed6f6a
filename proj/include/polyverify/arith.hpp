#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyverify {

using Int = long long;
using BigInt = mpz_class;

// Exact rational; mpq_class keeps values canonical (reduced, denominator > 0).
using Rat = mpq_class;

Rat rat(Int num, Int den = 1);
std::string rat_str(const Rat& q);

Int gcd_int(Int a, Int b);
Int lcm_int(Int a, Int b);

// Representative of a mod m in [0, m). Requires m >= 1.
Int mod_floor(Int a, Int m);

// floor(sqrt(n)) for n >= 0.
Int isqrt(Int n);
bool is_square(Int n);

// Sum of k-th powers of the positive divisors of n; 0 for n <= 0.
Int sigma(Int n, unsigned k = 1);

// sigma(n/d) when d | n, else 0. The divisor-sum convention used throughout
// the Eisenstein coefficient formulas.
Int sigma_div(Int n, Int d, unsigned k = 1);

// Rational-argument version: 0 unless x is a positive integer.
Rat sigma(const Rat& x, unsigned k = 1);

// Kronecker symbol (a|n), the full extension of the Jacobi symbol to
// arbitrary integer denominators (negative and even included).
int kronecker(Int a, Int n);

// Inverse of a modulo b, in [0, b). Requires gcd(a,b) = 1.
Int mod_inverse(Int a, Int b);

struct TwoAdicSplit {
    int valuation;  // ord_2(n)
    Int odd_part;   // n / 2^valuation

    bool operator==(const TwoAdicSplit&) const = default;
};

// n = 2^valuation * odd_part with odd_part odd. Requires n >= 1.
TwoAdicSplit two_adic_split(Int n);

Int euler_phi(Int n);
int moebius(Int n);
std::vector<Int> divisors(Int n);       // ascending
std::vector<Int> prime_factors(Int n);  // distinct, ascending

}  // namespace polyverify
