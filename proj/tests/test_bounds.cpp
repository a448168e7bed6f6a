#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polyverify/bounds.hpp"

using namespace polyverify;

namespace {

double rel_err(double got, double expected) { return std::abs(got - expected) / expected; }

// Independent evaluation of the norm-square divisor sum, straight off the
// formula with no shared code path (the pi powers in plain doubles).
double norm_sq_oracle(Int M) {
    const Int N = 32, D = 1024;
    const Int MN = M * M * N;
    double euler = 1.0;
    for (Int p : prime_factors(MN)) euler *= 1.0 - 1.0 / (static_cast<double>(p) * p);
    double S = 0.0;
    for (Int d : divisors(MN)) {
        double ratio = static_cast<double>(gcd_int(M * M, d)) / static_cast<double>(M * M);
        S += static_cast<double>(euler_phi(MN / d)) * static_cast<double>(euler_phi(d)) *
             (static_cast<double>(MN) / d) * std::pow(ratio, 4);
    }
    const double pi = 3.14159265358979323846;
    return 2.0 * 729.0 / std::pow(pi, 4) * (std::pow(static_cast<double>(M), 4) * N * N / euler) *
           S * 2.0 * (27.0 / D * MN / pi + 16.0);
}

}  // namespace

TEST_CASE("norm_sq exact rational parts for m = 7 (golden values)") {
    auto [A, B] = norm_sq_exact_parts(FormSpec::for_m(7));
    CHECK(rat_str(A) == "155523519479808000");
    CHECK(rat_str(B) == "29491867397652480");
}

TEST_CASE("norm_sq_bound matches an independent double-precision evaluation") {
    for (int m : {7, 9, 10, 11, 12, 13, 14}) {
        auto hp = norm_sq_bound(FormSpec::for_m(m));
        double oracle = norm_sq_oracle(2 * (static_cast<Int>(m) - 2));
        REQUIRE(rel_err(hp.approx, oracle) < 1e-9);
    }
}

TEST_CASE("norm_sq_bound golden value m = 7") {
    auto hp = norm_sq_bound(FormSpec::for_m(7));
    CHECK(rel_err(hp.approx, 8.10977089957625e14) < 1e-12);
}

TEST_CASE("pipeline golden values (frozen from the 60-digit evaluation)") {
    // exact-chain values
    const struct {
        int m;
        double norm_sq, coeff, cross, final_c;
    } rows[] = {
        {7, 8.10977089957625e14, 3.39894457233659e30, 1.90058943350833e82, 4.75147358377082e80},
        {9, 1.02284564760495e16, 3.46336490575731e31, 8.26359097127651e85, 1.47564124487081e84},
        {10, 3.18819451319385e16, 9.96076176921254e31, 3.32262458864748e87, 5.19160091976169e85},
        {11, 6.08093961135126e16, 1.50779196918430e32, 3.46507716057574e88, 4.81260716746631e86},
        {12, 1.48565703430481e17, 3.68036221756311e32, 4.19739151993283e89, 5.24673939991604e87},
        {13, 3.42556813023126e17, 8.05929094383375e32, 6.60316124886138e90, 7.50359232825157e88},
        {14, 5.62850846396536e17, 1.08735054589041e33, 2.03928051902474e91, 2.12425054065077e89},
    };
    for (const auto& row : rows) {
        auto rep = bound_report(row.m);
        CAPTURE(row.m);
        REQUIRE(rel_err(rep.norm_sq.approx, row.norm_sq) < 1e-10);
        REQUIRE(rel_err(rep.coeff_const.approx, row.coeff) < 1e-10);
        REQUIRE(rel_err(rep.crossover.approx, row.cross) < 1e-10);
        REQUIRE(rel_err(rep.final_const.approx, row.final_c) < 1e-10);
    }
}

TEST_CASE("coeff_bound_const worked example") {
    // N = 3200, L = 10, published norm-square 8.11e14 -> about 3.40e30
    HighPrec norm{"8.11e14", 8.11e14};
    auto c = coeff_bound_const(3200, 10, norm);
    CHECK(rel_err(c.approx, 3.40e30) < 0.005);
    // phi(L) factor trivial for L = 1
    auto c1 = coeff_bound_const(3200, 1, norm);
    CHECK(rel_err(c.approx / c1.approx, 4.0) < 1e-12);
}

TEST_CASE("crossover consistency example") {
    // (240 * 3.41e30)^(5/2) is about 1.92e82
    HighPrec c{"3.41e30", 3.41e30};
    auto cross = crossover_from_const(c, 240);
    CHECK(rel_err(cross.approx, 1.92e82) < 0.005);
}

TEST_CASE("norm_sq monotone in M across the seven rows") {
    double prev = 0.0;
    for (int m : {7, 9, 10, 11, 12, 13, 14}) {
        auto hp = norm_sq_bound(FormSpec::for_m(m));
        REQUIRE(hp.approx > prev);
        prev = hp.approx;
    }
}

TEST_CASE("deligne_bound") {
    CHECK(deligne_bound(1, 2).approx == 1.0);
    CHECK(rel_err(deligne_bound(12, 2).approx, 6.0 * std::sqrt(12.0)) < 1e-12);
}

TEST_CASE("rejected norm reading is off by many orders of magnitude") {
    auto rep = bound_report(7);
    CHECK(rep.coeff_const_norm_reading.approx > 1e36);  // about 9.7e37
    CHECK(rel_err(rep.coeff_const_norm_reading.approx, 9.7e37) < 0.02);
}

TEST_CASE("outward rounding: reported values bound the exact expression") {
    // norm_sq dec is an upper bound of A/pi^5 + B/pi^4: check against a
    // higher-precision evaluation
    for (int m : {7, 13}) {
        auto lo = norm_sq_bound(FormSpec::for_m(m), 40);
        auto hi = norm_sq_bound(FormSpec::for_m(m), 80);
        REQUIRE(lo.approx >= hi.approx * (1 - 1e-12));
    }
}
