#pragma once

#include <vector>

#include "polyverify/cyclotomic.hpp"

namespace polyverify {

// Cusp h/k in lowest terms, k >= 1 (infinity is represented by 1/N lifts).
struct CuspRep {
    Int h;
    Int k;
};

// Complete duplicate-free set of Gamma_1(N)-inequivalent cusps, lifted to
// coprime pairs. Deterministic order.
std::vector<CuspRep> cusp_reps(Int N);

// (1/2) sum_{d | N} phi(d) phi(N/d); counts the cusps of Gamma_1(N) for N > 4.
Int cusp_count_formula(Int N);

// Brute-force orbit count of pairs (a:c) mod N under the generating relations
// (a,c) -> (a+c, c) and (a,c) -> (-a,-c); test oracle for cusp_reps.
Int cusp_count_orbits(Int N);

// -lim z^2 (completed E2)|S_{M1,m}|V_{M2} (h/k + iz/k) as an exact element of
// Q(zeta_M1):  (1/(M1^3 M2^2)) sum_{j mod M1} gcd(h M1 M2 + j k, M1 k)^2 zeta_M1^(-jm).
CycNum e2_combo_cusp_growth(Int M1, Int m, Int M2, Int h, Int k);

// One sieved/V-shifted E2 term of an Eisenstein-component identity.
struct ComboTerm {
    Int coef;
    Int M1;
    Int m;
    Int M2;
};

struct EisIdentity {
    Rat scale;
    std::vector<ComboTerm> terms;
};

// The E2 operator combination equal to the Eisenstein component for this m,
// in sieve-before-V normal form.
const EisIdentity& eisenstein_identity(int m);

// Growth of the full identity combination at the cusp h/k.
CycNum combo_growth(int m, Int h, Int k);

struct GrowthMismatch {
    Int h;
    Int k;
};

struct GrowthReport {
    int m = 0;
    Int checked = 0;
    std::vector<GrowthMismatch> mismatches;
};

// Asserts exact equality of theta_cusp_growth_1248 and the identity
// combination over all coprime (h,k) with k <= kmax (OpenMP over k).
GrowthReport match_growth(int m, Int kmax);

// Same equality over a full set of Gamma_1(N)-inequivalent cusp representatives.
GrowthReport match_growth_full_orbit(int m, Int N);

}  // namespace polyverify
