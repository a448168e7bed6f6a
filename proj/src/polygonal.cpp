#include "polyverify/polygonal.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace polyverify {

Int FormSpec::level() const {
    Int l = 1;
    for (Int a : alpha) l = lcm_int(l, a);
    return 4 * l;
}

Int FormSpec::discriminant() const {
    Int d = 16;
    for (Int a : alpha) d *= a;
    return d;
}

FormSpec FormSpec::for_m(int m) {
    if (m < 3) throw std::domain_error("FormSpec::for_m: need m >= 3");
    FormSpec f;
    f.r = m;
    f.M = 2 * (static_cast<Int>(m) - 2);
    f.m = m;
    return f;
}

Int polygonal_number(Int m, Int l) {
    if (m < 3) throw std::domain_error("polygonal_number: need m >= 3");
    return ((m - 2) * l * l - (m - 4) * l) / 2;
}

int polygonal_preimage_count(Int m, Int value) {
    if (value < 0) return 0;
    // (m-2) l^2 - (m-4) l - 2*value = 0
    Int disc = (m - 4) * (m - 4) + 8 * (m - 2) * value;
    Int s = isqrt(disc);
    if (s * s != disc) return 0;
    int count = 0;
    for (Int sign : {s, -s}) {
        Int num = (m - 4) + sign;
        if (num % (2 * (m - 2)) == 0) ++count;
        if (s == 0) break;
    }
    return count;
}

namespace {

// Largest |l| with polygonal_number(m, l) <= budget, for either sign of l.
Int ell_range(Int m, Int budget) {
    if (budget < 0) return -1;
    // p_m(l) <= ((m-2)l^2 + (m-4)|l|)/2, grows like (m-2)l^2/2
    Int hi = isqrt(2 * budget / (m - 2)) + 2;
    return hi;
}

template <typename Fn>
bool scan_r(Int m, const Alpha& alpha, Int n, Fn&& on_solution) {
    // outer three coordinates by decreasing weight, innermost solved exactly
    std::array<int, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return alpha[i] > alpha[j]; });
    const Int a3 = alpha[idx[0]], a2 = alpha[idx[1]], a1 = alpha[idx[2]], a0 = alpha[idx[3]];

    auto each_ell = [&](Int weight, Int budget, auto&& body) -> bool {
        Int lim = ell_range(m, budget / weight);
        for (Int t = 0; t <= lim; ++t) {
            for (Int sign = 0; sign < 2; ++sign) {
                if (t == 0 && sign == 1) continue;
                Int l = sign == 0 ? t : -t;
                Int p = polygonal_number(m, l);
                if (weight * p > budget) continue;
                if (body(l, weight * p)) return true;
            }
        }
        return false;
    };

    return each_ell(a3, n, [&](Int l3, Int c3) {
        return each_ell(a2, n - c3, [&](Int l2, Int c2) {
            return each_ell(a1, n - c3 - c2, [&](Int l1, Int c1) {
                Int rem = n - c3 - c2 - c1;
                if (rem % a0 != 0) return false;
                Int target = rem / a0;
                Int disc = (m - 4) * (m - 4) + 8 * (m - 2) * target;
                Int s = isqrt(disc);
                if (s * s != disc) return false;
                bool stop = false;
                for (Int sign : {s, -s}) {
                    Int num = (m - 4) + sign;
                    if (num % (2 * (m - 2)) == 0) {
                        std::array<Int, 4> sol{};
                        sol[idx[0]] = l3;
                        sol[idx[1]] = l2;
                        sol[idx[2]] = l1;
                        sol[idx[3]] = num / (2 * (m - 2));
                        if (on_solution(sol)) {
                            stop = true;
                            break;
                        }
                    }
                    if (s == 0) break;
                }
                return stop;
            });
        });
    });
}

template <typename Fn>
bool scan_s(Int r, Int M, const Alpha& alpha, Int n, Fn&& on_solution) {
    std::array<int, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return alpha[i] > alpha[j]; });
    const Int a3 = alpha[idx[0]], a2 = alpha[idx[1]], a1 = alpha[idx[2]], a0 = alpha[idx[3]];
    const Int r0 = mod_floor(r, M);

    auto each_x = [&](Int weight, Int budget, auto&& body) -> bool {
        if (budget < 0) return false;
        Int lim = isqrt(budget / weight);
        // x = r0 + t*M over [-lim, lim+M)
        for (Int x = r0 - ((r0 + lim) / M) * M; x <= lim; x += M) {
            Int v = weight * x * x;
            if (v > budget) continue;
            if (body(x, v)) return true;
        }
        return false;
    };

    return each_x(a3, n, [&](Int x3, Int c3) {
        return each_x(a2, n - c3, [&](Int x2, Int c2) {
            return each_x(a1, n - c3 - c2, [&](Int x1, Int c1) {
                Int rem = n - c3 - c2 - c1;
                if (rem % a0 != 0) return false;
                Int target = rem / a0;
                Int s = isqrt(target);
                if (s * s != target) return false;
                bool stop = false;
                for (Int cand : {s, -s}) {
                    if (mod_floor(cand, M) == r0) {
                        std::array<Int, 4> sol{};
                        sol[idx[0]] = x3;
                        sol[idx[1]] = x2;
                        sol[idx[2]] = x1;
                        sol[idx[3]] = cand;
                        if (on_solution(sol)) {
                            stop = true;
                            break;
                        }
                    }
                    if (s == 0) break;
                }
                return stop;
            });
        });
    });
}

}  // namespace

Int count_r(Int m, const Alpha& alpha, Int n) {
    if (n < 0) return 0;
    Int count = 0;
    scan_r(m, alpha, n, [&](const std::array<Int, 4>&) {
        ++count;
        return false;
    });
    return count;
}

bool exists_r(Int m, const Alpha& alpha, Int n) { return exists_r(m, alpha, n, nullptr); }

bool exists_r(Int m, const Alpha& alpha, Int n, std::array<Int, 4>* witness) {
    if (n < 0) return false;
    bool found = false;
    scan_r(m, alpha, n, [&](const std::array<Int, 4>& sol) {
        if (witness) *witness = sol;
        found = true;
        return true;
    });
    return found;
}

Int count_s(Int r, Int M, const Alpha& alpha, Int n) {
    if (M < 1) throw std::domain_error("count_s: modulus must be positive");
    if (n < 0) return 0;
    Int count = 0;
    scan_s(r, M, alpha, n, [&](const std::array<Int, 4>&) {
        ++count;
        return false;
    });
    return count;
}

bool exists_s(Int r, Int M, const Alpha& alpha, Int n, std::array<Int, 4>* witness) {
    if (M < 1) throw std::domain_error("exists_s: modulus must be positive");
    if (n < 0) return false;
    bool found = false;
    scan_s(r, M, alpha, n, [&](const std::array<Int, 4>& sol) {
        if (witness) *witness = sol;
        found = true;
        return true;
    });
    return found;
}

bool check_relation(Int m, Int n) {
    Int lhs = count_r(m, kAlpha1248, n);
    Int rhs = count_s(m, 2 * (m - 2), kAlpha1248, 8 * (m - 2) * n + 15 * (m - 4) * (m - 4));
    return lhs == rhs;
}

VerifyReport verify_conjecture(Int m, Int n_max) {
    if (m < 3) throw std::domain_error("verify_conjecture: need m >= 3");
    VerifyReport report;
    report.m = m;
    report.n_max = n_max;

    std::vector<char> missing(static_cast<size_t>(n_max) + 1, 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (Int n = 1; n <= n_max; ++n) {
        if (!exists_r(m, kAlpha1248, n)) missing[static_cast<size_t>(n)] = 1;
    }
    for (Int n = 1; n <= n_max; ++n)
        if (missing[static_cast<size_t>(n)]) report.failures.push_back(n);

    for (Int n : {Int(1), Int(10), n_max / 2, n_max}) {
        if (n < 1 || n > n_max) continue;
        std::array<Int, 4> w{};
        if (exists_r(m, kAlpha1248, n, &w)) report.witness_samples.push_back({n, w});
    }
    return report;
}

bool descent_check_m12(Int n) {
    if (n < 1) throw std::domain_error("descent_check_m12: need n >= 1");
    if (!exists_s(12, 20, kAlpha1248, n)) return true;
    return exists_s(12, 20, kAlpha1248, 256 * n);
}

std::optional<DescentWitness> descent_witness_m12(Int n) {
    DescentWitness w;
    w.n = n;
    if (!exists_s(12, 20, kAlpha1248, n, &w.x)) return std::nullopt;
    if (!exists_s(12, 20, kAlpha1248, 256 * n, &w.x_scaled)) return std::nullopt;
    return w;
}

namespace ref {

Int count_r(Int m, const Alpha& alpha, Int n) {
    if (n < 0) return 0;
    Int lim = ell_range(m, n);
    Int count = 0;
    for (Int l1 = -lim; l1 <= lim; ++l1)
        for (Int l2 = -lim; l2 <= lim; ++l2)
            for (Int l3 = -lim; l3 <= lim; ++l3)
                for (Int l4 = -lim; l4 <= lim; ++l4) {
                    Int v = alpha[0] * polygonal_number(m, l1) +
                            alpha[1] * polygonal_number(m, l2) +
                            alpha[2] * polygonal_number(m, l3) +
                            alpha[3] * polygonal_number(m, l4);
                    if (v == n) ++count;
                }
    return count;
}

Int count_s(Int r, Int M, const Alpha& alpha, Int n) {
    if (n < 0) return 0;
    Int lim = isqrt(n);
    Int count = 0;
    Int r0 = mod_floor(r, M);
    std::vector<Int> xs;
    for (Int x = -lim - M; x <= lim + M; ++x)
        if (mod_floor(x, M) == r0) xs.push_back(x);
    for (Int x1 : xs)
        for (Int x2 : xs)
            for (Int x3 : xs)
                for (Int x4 : xs) {
                    Int v = alpha[0] * x1 * x1 + alpha[1] * x2 * x2 + alpha[2] * x3 * x3 +
                            alpha[3] * x4 * x4;
                    if (v == n) ++count;
                }
    return count;
}

}  // namespace ref

}  // namespace polyverify
