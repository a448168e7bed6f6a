// Command-line front end: batch verification runs emitting JSON/CSV reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <omp.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "polyverify/bounds.hpp"
#include "polyverify/cusps.hpp"
#include "polyverify/eisenstein.hpp"
#include "polyverify/gauss.hpp"
#include "polyverify/parallel.hpp"
#include "polyverify/polygonal.hpp"
#include "polyverify/qseries.hpp"

using json = nlohmann::ordered_json;
using namespace polyverify;

namespace {

json rat_json(const Rat& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

void write_output(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-") {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << content;
}

json cyc_json(const CycNum& v) {
    json basis = json::array();
    for (Int j = 0; j < v.order(); ++j) {
        if (v.coeff(j) == 0) continue;
        basis.push_back(json{{"power", j}, {"coeff", rat_json(v.coeff(j))}});
    }
    auto z = embed(v);
    return json{{"order", v.order()},
                {"value_basis", basis},
                {"complex_approx", {z.real(), z.imag()}}};
}

int cmd_verify(int m, Int max, const std::string& out) {
    auto rep = verify_conjecture(m, max);
    json doc;
    doc["m"] = rep.m;
    doc["max"] = rep.n_max;
    doc["failures"] = rep.failures;
    json ws = json::array();
    for (const auto& w : rep.witness_samples)
        ws.push_back(json{{"n", w.n}, {"ells", w.ells}});
    doc["witness_samples"] = ws;
    write_output(out, doc.dump(2));
    return 0;
}

int cmd_gauss(Int a, Int b, Int c, Int cmax, bool check, const std::string& out) {
    json doc;
    if (cmax > 0) {
        json records = json::array();
        std::atomic<long long> bad{0};
        for (Int cc = 1; cc <= cmax; ++cc) {
            for (Int aa = 0; aa < cc; ++aa) {
                for (Int bb = 0; bb < cc; ++bb) {
                    CycNum v = gauss_eval({aa, bb, cc});
                    if (check && !zcyc_equal(gauss_eval_z(aa, bb, cc), gauss_direct_z(aa, bb, cc)))
                        ++bad;
                    json rec = cyc_json(v);
                    rec["a"] = aa;
                    rec["b"] = bb;
                    rec["c"] = cc;
                    records.push_back(std::move(rec));
                }
            }
        }
        doc["records"] = std::move(records);
        if (check) doc["mismatches"] = bad.load();
        write_output(out, doc.dump(2));
        return check && bad != 0 ? 1 : 0;
    }
    doc = cyc_json(gauss_eval({a, b, c}));
    doc["a"] = a;
    doc["b"] = b;
    doc["c"] = c;
    if (check && !zcyc_equal(gauss_eval_z(a, b, c), gauss_direct_z(a, b, c))) {
        doc["oracle_match"] = false;
        write_output(out, doc.dump(2));
        return 1;
    }
    if (check) doc["oracle_match"] = true;
    write_output(out, doc.dump(2));
    return 0;
}

int cmd_decompose(int m, Int max, const std::string& out, const std::string& format) {
    FormSpec form = FormSpec::for_m(m);
    QSeries th = theta_series(form, max);
    auto cls = eis_support(m);

    // support audit: any off-class nonzero s is an error, not data
    for (const auto& [n, v] : th.coeffs()) {
        if (n > 0 && v != 0 && !cls.contains(n)) {
            std::fprintf(stderr, "support violation at n=%lld\n", n);
            return 1;
        }
    }

    if (format == "csv") {
        std::string buf = "n,s,a_num,a_den,b_num,b_den\n";
        for (Int n = cls.residue == 0 ? cls.modulus : cls.residue; n <= max; n += cls.modulus) {
            Rat a = eis_coeff(m, n);
            Rat s = th.coeff(n);
            Rat b = s - a;
            buf += std::to_string(n) + "," + rat_str(s) + "," + a.get_num().get_str() + "," +
                   a.get_den().get_str() + "," + b.get_num().get_str() + "," +
                   b.get_den().get_str() + "\n";
        }
        write_output(out, buf);
        return 0;
    }
    json rows = json::array();
    double worst_sqrt = 0.0, worst_deligne = 0.0;
    Int worst_sqrt_n = 0, worst_deligne_n = 0;
    for (Int n = cls.residue == 0 ? cls.modulus : cls.residue; n <= max; n += cls.modulus) {
        Rat a = eis_coeff(m, n);
        Rat s = th.coeff(n);
        Rat b = s - a;
        double babs = std::abs(b.get_d());
        double r1 = babs / (static_cast<double>(sigma(n, 0)) * std::sqrt(static_cast<double>(n)));
        double r2 = babs / deligne_bound(n, 2).approx;
        if (r1 > worst_sqrt) {
            worst_sqrt = r1;
            worst_sqrt_n = n;
        }
        if (r2 > worst_deligne) {
            worst_deligne = r2;
            worst_deligne_n = n;
        }
        rows.push_back(json{{"n", n},
                            {"s", s.get_num().get_str()},
                            {"a", rat_json(a)},
                            {"b", rat_json(b)}});
    }
    json doc;
    doc["m"] = m;
    doc["max"] = max;
    doc["residual_stats"] = json{
        {"max_abs_b_over_sigma0_sqrt_n", worst_sqrt},
        {"argmax_sqrt", worst_sqrt_n},
        {"max_abs_b_over_deligne_bound", worst_deligne},
        {"argmax_deligne", worst_deligne_n}};
    doc["rows"] = std::move(rows);
    write_output(out, doc.dump(2));
    return 0;
}

json high_prec_json(const HighPrec& h) { return json{{"dec", h.dec}, {"approx", h.approx}}; }

int cmd_bounds(bool all, int m, int digits, const std::string& out) {
    json rows = json::array();
    std::vector<int> ms;
    if (all)
        ms = {7, 9, 10, 11, 12, 13, 14};
    else
        ms = {m};
    for (int mm : ms) {
        auto rep = bound_report(mm, digits);
        const auto& pub = published_reference().at(mm);
        auto rel = [](double got, double expect) { return (got - expect) / expect; };
        json row;
        row["m"] = rep.m;
        row["M"] = rep.M;
        row["level"] = rep.level;
        row["eis_slope_denominator"] = rep.slope;
        row["norm_sq_exact"] = json{{"A_over_pi5", rat_str(rep.norm_sq_A)},
                                    {"B_over_pi4", rat_str(rep.norm_sq_B)}};
        row["norm_sq_bound"] = high_prec_json(rep.norm_sq);
        row["coeff_bound_const"] = high_prec_json(rep.coeff_const);
        row["crossover_n"] = high_prec_json(rep.crossover);
        row["final_constant"] = high_prec_json(rep.final_const);
        row["anchored"] = json{{"coeff_bound_const", high_prec_json(rep.anchored_coeff_const)},
                               {"crossover_n", high_prec_json(rep.anchored_crossover)},
                               {"final_constant", high_prec_json(rep.anchored_final_const)}};
        row["coeff_bound_if_norm_read"] = high_prec_json(rep.coeff_const_norm_reading);
        row["published"] = json{{"norm_sq", pub.norm_sq},
                                {"coeff_bound_const", pub.coeff_const},
                                {"crossover_n", pub.crossover},
                                {"final_constant", pub.final_const}};
        row["rel_err_vs_published"] =
            json{{"norm_sq", rel(rep.norm_sq.approx, pub.norm_sq)},
                 {"coeff_bound_const", rel(rep.anchored_coeff_const.approx, pub.coeff_const)},
                 {"crossover_n", rel(rep.anchored_crossover.approx, pub.crossover)},
                 {"final_constant", rel(rep.anchored_final_const.approx, pub.final_const)}};
        if (mm == 12) {
            row["note"] = "slope column uses the n/1920 headline; the exact per-n bound "
                          "drops below n/1920 once ord_2(n) >= 9";
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["digits"] = digits;
    doc["rows"] = std::move(rows);
    write_output(out, doc.dump(2));
    return 0;
}

int cmd_match_growth(int m, Int kmax, bool full_orbit, const std::string& out) {
    GrowthReport rep =
        full_orbit ? match_growth_full_orbit(m, 32 * 4 * (m - 2) * (m - 2)) : match_growth(m, kmax);
    json doc;
    doc["m"] = rep.m;
    doc["kmax"] = kmax;
    doc["full_orbit"] = full_orbit;
    doc["checked"] = rep.checked;
    json mm = json::array();
    for (const auto& x : rep.mismatches) mm.push_back(json{{"h", x.h}, {"k", x.k}});
    doc["mismatches"] = std::move(mm);
    write_output(out, doc.dump(2));
    return rep.mismatches.empty() ? 0 : 1;
}

int cmd_selftest(bool quick) {
    int failures = 0;
    auto step = [&](const char* what, bool ok) {
        std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what);
        if (!ok) ++failures;
    };

    const Int cmax = quick ? 40 : 80;
    {
        std::atomic<long long> bad{0};
#pragma omp parallel for schedule(dynamic)
        for (Int c = 1; c <= cmax; ++c)
            for (Int a = -c; a <= c; ++a)
                for (Int b = -c; b <= c; ++b)
                    if (!zcyc_equal(gauss_eval_z(a, b, c), gauss_direct_z(a, b, c))) ++bad;
        step("gauss closed form vs direct summation", bad == 0);
    }

    const std::pair<Int, Int> pairs[] = {{7, 10}, {9, 14}, {10, 16}, {11, 18},
                                         {12, 20}, {13, 22}, {14, 24}};
    {
        std::atomic<long long> bad{0};
        const Int kmax = quick ? 30 : 60;
#pragma omp parallel for schedule(dynamic)
        for (Int k = 1; k <= kmax; ++k)
            for (Int h = 0; h < k; ++h) {
                if (gcd_int(h, k) != 1) continue;
                for (auto [r, M] : pairs)
                    for (Int l = 0; l <= 3; ++l) {
                        auto spec = SpecialSpec::make(h, k, l, r, M);
                        Int p2 = Int(1) << l;
                        ZCyc direct = gauss_direct_z(p2 % k * h % k * (M * M % k) % k,
                                                     2 * p2 % k * h % k * (r * M % k) % k, k);
                        ZCyc expected = zcyc_mul(
                            direct, ZCyc::monomial(k, p2 % k * h % k * (r * r % k) % k));
                        if (!zcyc_equal(gauss_special_z(spec), expected)) ++bad;
                    }
            }
        step("special sums closed form vs twisted direct sums", bad == 0);
    }
    {
        std::atomic<long long> bad{0};
        const Int kmax = quick ? 30 : 60;
#pragma omp parallel for schedule(dynamic)
        for (Int k = 1; k <= kmax; ++k)
            for (Int h = 0; h < k; ++h) {
                if (gcd_int(h, k) != 1) continue;
                for (auto [r, M] : pairs) {
                    FormSpec form;
                    form.r = r;
                    form.M = M;
                    if (!scaled_equal(theta_cusp_growth_z(h, k, form),
                                      theta_cusp_growth_1248_z(h, k, r, M)))
                        ++bad;
                }
            }
        step("theta cusp growth closed form vs product route", bad == 0);
    }
    {
        const Int N = quick ? 300 : 800;
        bool ok = true;
        for (auto [m, M] : pairs) {
            (void)M;
            QSeries comp = eisenstein_component(static_cast<int>(m), N);
            QSeries th = theta_series(FormSpec::for_m(static_cast<int>(m)), N);
            auto cls = eis_support(static_cast<int>(m));
            for (Int n = 1; n <= N; ++n) {
                if (comp.coeff(n) != eis_coeff(static_cast<int>(m), n)) ok = false;
                if (th.coeff(n) != 0 && !cls.contains(n)) ok = false;
            }
        }
        step("eisenstein component pipeline vs closed form; theta support", ok);
    }
    {
        bool ok = true;
        const Int nmax = quick ? 100 : 300;
        for (Int m = 3; m <= 14 && ok; ++m)
            for (Int n = 0; n <= nmax && ok; ++n)
                if (!check_relation(m, n)) ok = false;
        step("polygonal-square correspondence", ok);
    }
    {
        bool ok = true;
        const Int nmax = quick ? 1000 : 2000;
        for (auto [m, M] : pairs) {
            (void)M;
            if (!verify_conjecture(m, nmax).failures.empty()) ok = false;
        }
        if (verify_conjecture(16, 29).failures != std::vector<Int>{29}) ok = false;
        if (verify_conjecture(20, 16).failures != std::vector<Int>{16}) ok = false;
        step("representability scan and known failures", ok);
    }
    {
        std::atomic<long long> bad{0};
        const Int nmax = quick ? 200 : 500;
#pragma omp parallel for schedule(dynamic, 16)
        for (Int n = 1; n <= nmax; ++n)
            if (!descent_check_m12(n)) ++bad;
        step("descent check for m = 12", bad == 0);
    }
    {
        std::mt19937 rng(1);
        QSeries f = e2(200);
        bool ok = true;
        for (int i = 0; i < (quick ? 20 : 60) && ok; ++i) {
            Int M1 = 1 + static_cast<Int>(rng() % 8);
            Int M2 = 1 + static_cast<Int>(rng() % 8);
            Int m = static_cast<Int>(rng() % (M1 * M2 + 1));
            if (!commute_check(f, M1, M2, m)) ok = false;
        }
        step("sieve/V operator laws", ok);
    }
    {
        bool ok = true;
        const Int kmax = quick ? 20 : 40;
        for (auto [m, M] : pairs) {
            (void)M;
            if (!match_growth(static_cast<int>(m), kmax).mismatches.empty()) ok = false;
        }
        step("cusp growth matching", ok);
    }

    if (failures == 0) {
        std::printf("selftest passed\n");
        return 0;
    }
    std::printf("selftest: %d failure(s)\n", failures);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyverify: exact verification toolkit for weighted sums of generalized "
                 "polygonal numbers"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 0;
    std::string config_path;
    app.add_option("--workers", workers, "worker threads (default: POLYVERIFY_WORKERS or all)");
    app.add_option("--config", config_path, "JSON config file with default budgets");

    // config defaults, overridden by flags
    Int cfg_max = 0, cfg_kmax = 0;
    int cfg_digits = 0;

    int m = 7;
    Int max = 100000, kmax = 100;
    Int ga = 1, gb = 0, gc = 1, gcmax = 0;
    int digits = 60;
    bool all = false, check = false, full_orbit = false, quick = false;
    std::string out, format = "json";

    auto* verify = app.add_subcommand("verify", "scan n <= max for unrepresentable values");
    verify->add_option("--m", m, "polygon index")->required();
    verify->add_option("--max", max, "scan bound");
    verify->add_option("--out", out, "output file (default stdout)");
    verify->add_option("--format", format, "json");

    auto* gauss = app.add_subcommand("gauss", "evaluate generalized quadratic Gauss sums");
    gauss->add_option("--a", ga, "quadratic coefficient");
    gauss->add_option("--b", gb, "linear coefficient");
    gauss->add_option("--c", gc, "modulus");
    gauss->add_option("--cmax", gcmax, "sweep all residues a,b mod c for c <= cmax");
    gauss->add_flag("--check", check, "also compare against direct summation");
    gauss->add_option("--out", out, "output file (default stdout)");

    auto* decompose =
        app.add_subcommand("decompose", "emit (n, s, a, b) decomposition rows for one m");
    decompose->add_option("--m", m, "polygon index")->required();
    decompose->add_option("--max", max, "largest n")->capture_default_str();
    decompose->add_option("--out", out, "output file (default stdout)");
    decompose->add_option("--format", format, "json or csv");

    auto* bounds = app.add_subcommand("bounds", "compute the explicit bound pipeline");
    bounds->add_flag("--all", all, "all seven rows");
    bounds->add_option("--m", m, "single polygon index");
    bounds->add_option("--digits", digits, "working precision in decimal digits");
    bounds->add_option("--out", out, "output file (default stdout)");

    auto* growth = app.add_subcommand("match-growth", "verify cusp growth of both identity sides");
    growth->add_option("--m", m, "polygon index")->required();
    growth->add_option("--kmax", kmax, "largest denominator in the cusp sweep");
    growth->add_flag("--full-orbit", full_orbit, "sweep full cusp orbit representatives");
    growth->add_option("--out", out, "output file (default stdout)");

    auto* selftest = app.add_subcommand("selftest", "run all oracle-equivalence suites");
    selftest->add_flag("--quick", quick, "reduced budgets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw std::runtime_error("cannot open config file: " + config_path);
            json cfg = json::parse(f);
            if (cfg.contains("workers") && workers == 0) workers = cfg["workers"].get<int>();
            if (cfg.contains("max")) cfg_max = cfg["max"].get<Int>();
            if (cfg.contains("kmax")) cfg_kmax = cfg["kmax"].get<Int>();
            if (cfg.contains("digits")) cfg_digits = cfg["digits"].get<int>();
            if (cfg_max > 0 && verify->count("--max") == 0 && decompose->count("--max") == 0)
                max = cfg_max;
            if (cfg_kmax > 0 && growth->count("--kmax") == 0) kmax = cfg_kmax;
            if (cfg_digits > 0 && bounds->count("--digits") == 0) digits = cfg_digits;
        }
        if (workers > 0)
            set_workers(workers);
        else
            apply_env_workers();

        if (verify->parsed()) return cmd_verify(m, max, out);
        if (gauss->parsed()) return cmd_gauss(ga, gb, gc, gcmax, check, out);
        if (decompose->parsed()) {
            if (decompose->count("--max") == 0 && cfg_max == 0) max = 5000;
            return cmd_decompose(m, max, out, format);
        }
        if (bounds->parsed()) return cmd_bounds(all, m, digits, out);
        if (growth->parsed()) return cmd_match_growth(m, kmax, full_orbit, out);
        if (selftest->parsed()) return cmd_selftest(quick);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
