// Benchmark: OpenMP kernels against their serial runs, and the closed-form
// evaluators against the direct-summation reference paths.

#include <omp.h>

#include <cstdio>
#include <functional>

#include "polyverify/cusps.hpp"
#include "polyverify/gauss.hpp"
#include "polyverify/parallel.hpp"
#include "polyverify/polygonal.hpp"
#include "polyverify/qseries.hpp"

using namespace polyverify;

namespace {

double time_run(const std::function<void()>& fn) {
    double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-44s %9.3fs %9.3fs %7.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    const int workers = default_workers();
    std::printf("%-44s %10s %10s %8s   (%d workers)\n", "kernel", "serial", "parallel", "speedup",
                workers);

    {
        FormSpec dense;  // r=0, M=1: every lattice point counts
        auto run = [&] { theta_series(dense, 40000); };
        set_workers(1);
        double s = time_run(run);
        set_workers(workers);
        double p = time_run(run);
        row("theta series forward enumeration, N=4e4", s, p);
    }
    {
        auto run = [] { verify_conjecture(7, 200000); };
        set_workers(1);
        double s = time_run(run);
        set_workers(workers);
        double p = time_run(run);
        row("representability scan, m=7, N=2e5", s, p);
    }
    {
        auto run = [] {
            for (Int m = 3; m <= 14; ++m)
                for (Int n = 0; n <= 1200; ++n) check_relation(m, n);
        };
        set_workers(1);
        double s = time_run(run);
        // the relation check parallelizes over (m, n) pairs
        auto run_p = [] {
#pragma omp parallel for schedule(dynamic) collapse(2)
            for (Int m = 3; m <= 14; ++m)
                for (Int n = 0; n <= 1200; ++n) check_relation(m, n);
        };
        set_workers(workers);
        double p = time_run(run_p);
        row("polygonal-square correspondence, n<=1200", s, p);
    }
    {
        auto run = [] {
            for (int m : {7, 12, 14}) match_growth(m, 120);
        };
        set_workers(1);
        double s = time_run(run);
        set_workers(workers);
        double p = time_run(run);
        row("cusp growth matching, m in {7,12,14}, k<=120", s, p);
    }
    {
        auto run = [] {
#pragma omp parallel for schedule(dynamic)
            for (Int c = 200; c <= 260; ++c)
                for (Int a = 0; a < c; ++a)
                    for (Int b = 0; b < c; ++b)
                        if (!zcyc_equal(gauss_eval_z(a, b, c), gauss_direct_z(a, b, c)))
                            std::abort();
        };
        set_workers(1);
        double s = time_run(run);
        set_workers(workers);
        double p = time_run(run);
        row("Gauss oracle sweep, 200<=c<=260", s, p);
    }

    std::printf("\n%-44s %10s %10s %8s\n", "evaluator", "reference", "fast", "speedup");
    {
        double ref = time_run([] {
            for (Int c = 1; c <= 250; ++c)
                for (Int a = 0; a < c; ++a) gauss_direct_z(a, a / 2, c);
        });
        double fast = time_run([] {
            for (Int c = 1; c <= 250; ++c)
                for (Int a = 0; a < c; ++a) gauss_eval_z(a, a / 2, c);
        });
        row("Gauss sums, all a mod c, c<=250", ref, fast);
    }
    {
        double ref = time_run([] {
            for (Int n = 900; n < 960; ++n) ref::count_s(7, 10, kAlpha1248, n);
        });
        double fast = time_run([] {
            for (Int n = 900; n < 960; ++n) count_s(7, 10, kAlpha1248, n);
        });
        row("count_s box loops vs pruned solver", ref, fast);
    }
    {
        FormSpec form;
        form.r = 7;
        form.M = 10;
        double ref = time_run([&] {
            for (Int k = 1; k <= 128; ++k)
                for (Int h = 0; h < k; ++h)
                    if (gcd_int(h, k) == 1) theta_cusp_growth_z(h, k, form);
        });
        double fast = time_run([&] {
            for (Int k = 1; k <= 128; ++k)
                for (Int h = 0; h < k; ++h)
                    if (gcd_int(h, k) == 1) theta_cusp_growth_1248_z(h, k, 7, 10);
        });
        row("theta growth product route vs closed form", ref, fast);
    }
    return 0;
}
