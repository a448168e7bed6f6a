#include "polyverify/cusps.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>

#include "polyverify/gauss.hpp"

namespace polyverify {

namespace {

// Canonical key of the Gamma_1(N) class of a pair (a, c) mod N with
// gcd(a, c, N) = 1: the j-shift orbit {a + jc mod N} is a + gcd(c,N) Z, so the
// class is determined by (c, a mod gcd(c,N)) up to the global sign flip.
std::pair<Int, Int> canonical_key(Int a, Int c, Int N) {
    auto key = [N](Int aa, Int cc) {
        Int g = cc == 0 ? N : gcd_int(cc, N);
        return std::pair<Int, Int>(cc, mod_floor(aa, g));
    };
    auto k1 = key(a, c);
    auto k2 = key(mod_floor(-a, N), mod_floor(-c, N));
    return std::min(k1, k2);
}

}  // namespace

std::vector<CuspRep> cusp_reps(Int N) {
    if (N < 1) throw std::domain_error("cusp_reps: need N >= 1");
    std::set<std::pair<Int, Int>> seen;
    std::vector<CuspRep> reps;
    for (Int c = 0; c < N; ++c) {
        Int g = c == 0 ? N : gcd_int(c, N);
        for (Int a = 0; a < g; ++a) {
            if (gcd_int(gcd_int(a, c), N) != 1) continue;
            auto key = canonical_key(a, c, N);
            if (!seen.insert(key).second) continue;
            // lift to a coprime pair with k >= 1
            Int k = c == 0 ? N : c;
            Int h = a;
            while (gcd_int(h, k) != 1) h += N;
            reps.push_back({h, k});
        }
    }
    return reps;
}

Int cusp_count_formula(Int N) {
    Int total = 0;
    for (Int d : divisors(N)) total += euler_phi(d) * euler_phi(N / d);
    return total / 2;
}

Int cusp_count_orbits(Int N) {
    std::set<std::pair<Int, Int>> seen;
    Int count = 0;
    for (Int c = 0; c < N; ++c) {
        for (Int a = 0; a < N; ++a) {
            if (gcd_int(gcd_int(a, c), N) != 1) continue;
            if (seen.count({a, c})) continue;
            ++count;
            std::vector<std::pair<Int, Int>> stack{{a, c}};
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                if (!seen.insert({x, y}).second) continue;
                stack.push_back({mod_floor(x + y, N), y});
                stack.push_back({mod_floor(-x, N), mod_floor(-y, N)});
            }
        }
    }
    return count;
}

CycNum e2_combo_cusp_growth(Int M1, Int m, Int M2, Int h, Int k) {
    if (M1 < 1 || M2 < 1 || k < 1) throw std::domain_error("e2_combo_cusp_growth: bad arguments");
    if (gcd_int(mod_floor(h, k), k) != 1)
        throw std::domain_error("e2_combo_cusp_growth: h, k must be coprime");
    ZCyc vec(M1);
    for (Int j = 0; j < M1; ++j) {
        Int g = gcd_int(std::abs(h * M1 * M2 + j * k), M1 * k);
        if (g == 0) g = M1 * k;
        vec.c[static_cast<size_t>(mod_floor(-j * m, M1))] += g * g;
    }
    Rat scale = rat(1, M1 * M1 * M1 * M2 * M2);
    return CycNum::from_zcyc(vec, scale);
}

const EisIdentity& eisenstein_identity(int m) {
    static const std::map<int, EisIdentity> table = {
        {7, {rat(-1, 5760), {{1, 40, 15, 1}, {-1, 8, 3, 5}}}},
        {9, {rat(-1, 16128), {{1, 56, 39, 1}}}},
        {10, {rat(-1, 6144), {{1, 16, 7, 4}}}},
        {11, {rat(-1, 41472), {{1, 72, 15, 1}}}},
        {12,
         {rat(-1, 2880),
          {{1, 5, 0, 16},
           {-1, 5, 0, 32},
           {8, 5, 0, 256},
           {-32, 5, 0, 512},
           {-1, 1, 0, 80},
           {1, 1, 0, 160},
           {-8, 1, 0, 1280},
           {32, 1, 0, 2560}}}},
        {13, {rat(-1, 63360), {{1, 88, 71, 1}}}},
        {14, {rat(-1, 18432), {{1, 24, 15, 4}, {-1, 8, 5, 12}}}},
    };
    auto it = table.find(m);
    if (it == table.end()) throw std::domain_error("eisenstein_identity: unsupported m");
    return it->second;
}

CycNum combo_growth(int m, Int h, Int k) {
    const auto& ident = eisenstein_identity(m);
    CycNum total;
    for (const auto& t : ident.terms) {
        CycNum g = e2_combo_cusp_growth(t.M1, t.m, t.M2, h, k);
        total += rat(t.coef) * g;
    }
    return ident.scale * total;
}

namespace {

GrowthReport run_match(int m, const std::vector<CuspRep>& cusps) {
    const Int M = 2 * (static_cast<Int>(m) - 2);
    GrowthReport report;
    report.m = m;
    report.checked = static_cast<Int>(cusps.size());

    std::vector<char> bad(cusps.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
    for (size_t i = 0; i < cusps.size(); ++i) {
        const auto& cusp = cusps[i];
        CycNum theta = theta_cusp_growth_1248(cusp.h, cusp.k, m, M);
        CycNum combo = combo_growth(m, cusp.h, cusp.k);
        if (theta != combo) bad[i] = 1;
    }
    for (size_t i = 0; i < cusps.size(); ++i)
        if (bad[i]) report.mismatches.push_back({cusps[i].h, cusps[i].k});
    return report;
}

}  // namespace

GrowthReport match_growth(int m, Int kmax) {
    std::vector<CuspRep> cusps;
    for (Int k = 1; k <= kmax; ++k)
        for (Int h = 0; h < k; ++h)
            if (gcd_int(h, k) == 1) cusps.push_back({h, k});
    return run_match(m, cusps);
}

GrowthReport match_growth_full_orbit(int m, Int N) {
    return run_match(m, cusp_reps(N));
}

}  // namespace polyverify
