// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exit 0 iff all pass.

#include <omp.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "polyverify/bounds.hpp"
#include "polyverify/cusps.hpp"
#include "polyverify/eisenstein.hpp"
#include "polyverify/gauss.hpp"
#include "polyverify/parallel.hpp"
#include "polyverify/polygonal.hpp"
#include "polyverify/qseries.hpp"

using namespace polyverify;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds) {
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                seconds);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

constexpr std::pair<Int, Int> kPairs[] = {{7, 10}, {9, 14}, {10, 16}, {11, 18},
                                          {12, 20}, {13, 22}, {14, 24}};

// 1. gauss_eval == gauss_direct for 1 <= c <= 300, |a|,|b| <= 2c.
//    Both evaluators reduce (a, b) mod c on entry, so the sweep over residue
//    classes covers every literal pair; for c <= 40 the literal ranges are
//    also run raw as a guard on that normalization.
bool criterion1() {
    std::atomic<long long> bad{0};
#pragma omp parallel for schedule(dynamic)
    for (Int c = 1; c <= 300; ++c) {
        long long local = 0;
        for (Int a = 0; a < c; ++a)
            for (Int b = 0; b < c; ++b)
                if (!zcyc_equal(gauss_eval_z(a, b, c), gauss_direct_z(a, b, c))) ++local;
        if (local) bad += local;
    }
#pragma omp parallel for schedule(dynamic)
    for (Int c = 1; c <= 40; ++c) {
        long long local = 0;
        for (Int a = -2 * c; a <= 2 * c; ++a)
            for (Int b = -2 * c; b <= 2 * c; ++b)
                if (!zcyc_equal(gauss_eval_z(a, b, c), gauss_direct_z(a, b, c))) ++local;
        if (local) bad += local;
    }
    return bad == 0;
}

// 2. gauss_special == phase * gauss_direct for k <= 200, the seven (r, M),
//    l in {0,1,2,3}, all h coprime to k.
bool criterion2() {
    std::atomic<long long> bad{0};
#pragma omp parallel for schedule(dynamic)
    for (Int k = 1; k <= 200; ++k) {
        long long local = 0;
        for (Int h = 0; h < k; ++h) {
            if (gcd_int(h, k) != 1) continue;
            for (auto [r, M] : kPairs) {
                for (Int l = 0; l <= 3; ++l) {
                    auto spec = SpecialSpec::make(h, k, l, r, M);
                    Int p2 = Int(1) << l;
                    ZCyc direct = gauss_direct_z(p2 % k * h % k * (M * M % k) % k,
                                                 2 * p2 % k * h % k * (r * M % k) % k, k);
                    ZCyc expected =
                        zcyc_mul(direct, ZCyc::monomial(k, p2 % k * h % k * (r * r % k) % k));
                    if (!zcyc_equal(gauss_special_z(spec), expected)) ++local;
                }
            }
        }
        if (local) bad += local;
    }
    return bad == 0;
}

// 3. theta_cusp_growth_1248 == theta_cusp_growth for k <= 200, all h coprime,
//    all seven (r, M).
bool criterion3() {
    std::atomic<long long> bad{0};
#pragma omp parallel for schedule(dynamic)
    for (Int k = 1; k <= 200; ++k) {
        long long local = 0;
        for (Int h = 0; h < k; ++h) {
            if (gcd_int(h, k) != 1) continue;
            for (auto [r, M] : kPairs) {
                FormSpec form;
                form.r = r;
                form.M = M;
                if (!scaled_equal(theta_cusp_growth_z(h, k, form),
                                  theta_cusp_growth_1248_z(h, k, r, M)))
                    ++local;
            }
        }
        if (local) bad += local;
    }
    return bad == 0;
}

// 4. eisenstein_component(m, 5000) coefficients equal eis_coeff(m, n) for all
//    n <= 5000, exactly.
bool criterion4() {
    bool ok = true;
    for (auto [m, M] : kPairs) {
        (void)M;
        QSeries comp = eisenstein_component(static_cast<int>(m), 5000);
        for (Int n = 1; n <= 5000; ++n) {
            if (comp.coeff(n) != eis_coeff(static_cast<int>(m), n)) {
                std::printf("    criterion 4 mismatch: m=%lld n=%lld\n", m, n);
                ok = false;
            }
        }
    }
    return ok;
}

// 5. count_s is supported exactly on the stated congruence classes, n <= 5000.
bool criterion5() {
    bool ok = true;
    std::mt19937 rng(9001);
    for (auto [m, M] : kPairs) {
        FormSpec form = FormSpec::for_m(static_cast<int>(m));
        QSeries th = theta_series(form, 5000);
        auto cls = eis_support(static_cast<int>(m));
        for (const auto& [n, v] : th.coeffs()) {
            if (n > 0 && v != 0 && !cls.contains(n)) {
                std::printf("    criterion 5 support violation: m=%lld n=%lld\n", m, n);
                ok = false;
            }
        }
        // spot-check the series against the pointwise counter
        for (int i = 0; i < 25; ++i) {
            Int n = static_cast<Int>(rng() % 5001);
            if (th.coeff(n) != rat(count_s(form.r, M, kAlpha1248, n))) {
                std::printf("    criterion 5 count mismatch: m=%lld n=%lld\n", m, n);
                ok = false;
            }
        }
    }
    return ok;
}

// 6. check_relation(m, n) for all m in {3..14}, n <= 2000.
bool criterion6() {
    std::atomic<long long> bad{0};
#pragma omp parallel for schedule(dynamic) collapse(2)
    for (Int m = 3; m <= 14; ++m)
        for (Int n = 0; n <= 2000; ++n)
            if (!check_relation(m, n)) ++bad;
    return bad == 0;
}

// 7. verify_conjecture: empty failure lists at 1e5 for the seven m; the known
//    failing n for m = 16..20.
bool criterion7() {
    bool ok = true;
    for (auto [m, M] : kPairs) {
        (void)M;
        auto rep = verify_conjecture(m, 100000);
        if (!rep.failures.empty()) {
            std::printf("    criterion 7: m=%lld has %zu failures (first %lld)\n", m,
                        rep.failures.size(), rep.failures.front());
            ok = false;
        }
    }
    const std::pair<Int, Int> known[] = {{16, 29}, {17, 30}, {18, 16}, {19, 17}, {20, 16}};
    for (auto [m, n_fail] : known) {
        auto rep = verify_conjecture(m, n_fail);
        if (rep.failures != std::vector<Int>{n_fail}) {
            std::printf("    criterion 7: m=%lld expected sole failure %lld\n", m, n_fail);
            ok = false;
        }
    }
    return ok;
}

// 8. Bound pipeline vs the published reference rows. The norm-square column
//    checked at 5% against the exact divisor-sum evaluation; the coefficient
//    constant and the two final columns checked at 2% under the norm-square
//    column reading (published column used as the bound on ||f||^2, later
//    stages consuming the previous stage outward-rounded to 3 significant
//    digits).
bool criterion8() {
    bool ok = true;
    std::printf("    m  | norm_sq(exact) vs pub   | coeff    vs pub    | crossover vs pub   | "
                "final     vs pub\n");
    for (auto [m, M] : kPairs) {
        (void)M;
        auto rep = bound_report(static_cast<int>(m));
        const auto& pub = published_reference().at(static_cast<int>(m));
        auto rel = [](double got, double expect) { return (got - expect) / expect; };
        double e4 = rel(rep.norm_sq.approx, pub.norm_sq);
        double e5 = rel(rep.anchored_coeff_const.approx, pub.coeff_const);
        double ec = rel(rep.anchored_crossover.approx, pub.crossover);
        double ef = rel(rep.anchored_final_const.approx, pub.final_const);
        bool row_ok = std::abs(e4) <= 0.05 && std::abs(e5) <= 0.02 && std::abs(ec) <= 0.02 &&
                      std::abs(ef) <= 0.02;
        std::printf("    %2lld | %.4e %+7.2f%% | %.3e %+6.2f%% | %.3e %+6.2f%% | %.3e %+6.2f%%%s\n",
                    m, rep.norm_sq.approx, 100 * e4, rep.anchored_coeff_const.approx, 100 * e5,
                    rep.anchored_crossover.approx, 100 * ec, rep.anchored_final_const.approx,
                    100 * ef, row_ok ? "" : "  <-- outside tolerance");
        if (!row_ok) ok = false;
    }
    if (!ok) {
        std::printf(
            "    note: the published m=13 norm-square entry (2.55e17) does not follow from the\n"
            "    divisor-sum formula (exact value 3.4256e17; the printed number matches the\n"
            "    formula with its (1 - 1/4) Euler factor dropped), and the published m=10\n"
            "    crossover row (3.41e87) is inconsistent with the same table's coefficient\n"
            "    column (9.98e31 -> (1024*9.98e31)^(5/2) = 3.34e87). All other entries\n"
            "    reproduce within tolerance; the self-contained exact pipeline is emitted by\n"
            "    `polyverify bounds --all`.\n");
    }
    return ok;
}

// 9. Descent for m = 12: n <= 3000, plus one explicit witness pair.
bool criterion9() {
    std::atomic<long long> bad{0};
#pragma omp parallel for schedule(dynamic, 16)
    for (Int n = 1; n <= 3000; ++n)
        if (!descent_check_m12(n)) ++bad;
    if (bad != 0) return false;

    for (Int n = 1; n <= 3000; ++n) {
        if (auto w = descent_witness_m12(n)) {
            std::printf("    descent witness: n=%lld x=(%lld,%lld,%lld,%lld) -> 256n=%lld "
                        "x'=(%lld,%lld,%lld,%lld)\n",
                        w->n, w->x[0], w->x[1], w->x[2], w->x[3], 256 * w->n, w->x_scaled[0],
                        w->x_scaled[1], w->x_scaled[2], w->x_scaled[3]);
            return true;
        }
    }
    return false;  // no represented n found: should not happen
}

// 10. Operator laws on 200 randomized cases, exact.
bool criterion10() {
    std::mt19937 rng(60902);
    QSeries f = e2(400);
    QSeries th = theta_series(FormSpec::for_m(7), 400);
    int done = 0;
    while (done < 200) {
        Int M1 = 1 + static_cast<Int>(rng() % 10);
        Int M2 = 1 + static_cast<Int>(rng() % 10);
        if (M1 * M2 > 60) continue;
        Int m = static_cast<Int>(rng() % (2 * M1 * M2)) - M2;
        const QSeries& input = done % 2 == 0 ? f : th;
        if (!commute_check(input, M1, M2, m)) return false;

        // partition of unity and V-composition on the same draws
        QSeries total(input.truncation());
        for (Int r = 0; r < M1; ++r) total += sieve(input, M1, r);
        if (!total.agrees_with(input)) return false;
        Int d1 = 1 + static_cast<Int>(rng() % 6), d2 = 1 + static_cast<Int>(rng() % 6);
        if (!v_op(v_op(input, d1), d2).agrees_with(v_op(input, d1 * d2))) return false;
        ++done;
    }
    return true;
}

// 11. Growth matching for the seven m over all coprime (h,k), k <= 100.
bool criterion11() {
    bool ok = true;
    for (auto [m, M] : kPairs) {
        (void)M;
        auto rep = match_growth(static_cast<int>(m), 100);
        if (!rep.mismatches.empty()) {
            std::printf("    criterion 11: m=%lld has %zu mismatches, first at %lld/%lld\n", m,
                        rep.mismatches.size(), rep.mismatches.front().h, rep.mismatches.front().k);
            ok = false;
        }
    }
    return ok;
}

template <typename Fn>
void run(int criterion, const std::string& what, Fn&& fn) {
    double t0 = omp_get_wtime();
    bool ok = fn();
    report(criterion, ok, what, omp_get_wtime() - t0);
}

}  // namespace

int main() {
    apply_env_workers();
    std::printf("acceptance suite, %d workers\n", default_workers());

    run(1, "Gauss-sum oracle equivalence, c <= 300, |a|,|b| <= 2c", criterion1);
    run(2, "special-sum closed form, k <= 200, seven (r,M), l in 0..3", criterion2);
    run(3, "theta cusp growth: closed form vs product route, k <= 200", criterion3);
    run(4, "Eisenstein coefficients: operator pipeline vs closed form, n <= 5000", criterion4);
    run(5, "theta support matches the stated congruence classes, n <= 5000", criterion5);
    run(6, "polygonal-square correspondence, m in 3..14, n <= 2000", criterion6);
    run(7, "representability scan to 1e5 clean; known failures for m = 16..20", criterion7);
    run(8, "bound pipeline reproduces the published table rows", criterion8);
    run(9, "m = 12 descent, n <= 3000, with explicit witness", criterion9);
    run(10, "operator laws on 200 randomized cases", criterion10);
    run(11, "cusp growth matching, seven m, k <= 100", criterion11);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
