#include "polyverify/eisenstein.hpp"

#include "polyverify/polygonal.hpp"

namespace polyverify {

SupportClass eis_support(int m) {
    switch (m) {
        case 7: return {40, 15};
        case 9: return {56, 39};
        case 10: return {64, 28};
        case 11: return {72, 15};
        case 12: return {80, 0};
        case 13: return {88, 71};
        case 14: return {96, 60};
        default: throw std::domain_error("eis_support: unsupported m");
    }
}

Rat eis_coeff(int m, Int n) {
    if (n < 1) throw std::domain_error("eis_coeff: need n >= 1");
    if (!eis_support(m).contains(n)) return Rat(0);
    switch (m) {
        case 7: return rat(sigma(n) - sigma_div(n, 5), 240);
        case 9: return rat(sigma(n), 672);
        case 10: return rat(sigma_div(n, 4), 256);
        case 11: return rat(sigma(n), 1728);
        case 12:
            return rat(sigma_div(n, 16) - sigma_div(n, 32) - sigma_div(n, 80) +
                           sigma_div(n, 160) + 8 * sigma_div(n, 256) - 32 * sigma_div(n, 512) -
                           8 * sigma_div(n, 1280) + 32 * sigma_div(n, 2560),
                       120);
        case 13: return rat(sigma(n), 2640);
        case 14: return rat(sigma_div(n, 4) - sigma_div(n, 12), 768);
        default: throw std::domain_error("eis_coeff: unsupported m");
    }
}

Rat eis_lower_bound(int m, Int n) {
    if (!eis_support(m).contains(n))
        throw std::domain_error("eis_lower_bound: n outside the support class");
    if (m != 12) return rat(n, eis_headline_slope(m));
    // n = 2^a 5^b c with gcd(10, c) = 1; bound (5^b c / 120) * (2^(a-4) or 24)
    auto ts = two_adic_split(n);
    Int a = ts.valuation;
    Int rest = ts.odd_part;
    Int five = 1;
    while (rest % 5 == 0) {
        rest /= 5;
        five *= 5;
    }
    Int factor = a <= 7 ? (Int(1) << (a - 4)) : 24;
    return rat(five * rest * factor, 120);
}

Int eis_headline_slope(int m) {
    switch (m) {
        case 7: return 240;
        case 9: return 672;
        case 10: return 1024;
        case 11: return 1728;
        case 12: return 1920;
        case 13: return 2640;
        case 14: return 3072;
        default: throw std::domain_error("eis_headline_slope: unsupported m");
    }
}

Rat cusp_residual(int m, Int n) {
    Int s = count_s(m, 2 * (static_cast<Int>(m) - 2), kAlpha1248, n);
    return rat(s) - eis_coeff(m, n);
}

}  // namespace polyverify
