#include "polyverify/qseries.hpp"

#include <omp.h>

#include <algorithm>
#include <vector>

namespace polyverify {

QSeries& QSeries::operator+=(const QSeries& other) {
    trunc_ = std::min(trunc_, other.trunc_);
    for (const auto& [n, v] : other.coeffs_) {
        if (n > trunc_) break;
        Rat s = coeff(n) + v;
        if (s == 0)
            coeffs_.erase(n);
        else
            coeffs_[n] = s;
    }
    coeffs_.erase(coeffs_.upper_bound(trunc_), coeffs_.end());
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
    trunc_ = std::min(trunc_, other.trunc_);
    for (const auto& [n, v] : other.coeffs_) {
        if (n > trunc_) break;
        Rat s = coeff(n) - v;
        if (s == 0)
            coeffs_.erase(n);
        else
            coeffs_[n] = s;
    }
    coeffs_.erase(coeffs_.upper_bound(trunc_), coeffs_.end());
    return *this;
}

QSeries& QSeries::operator*=(const Rat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [n, v] : coeffs_) v *= s;
    return *this;
}

bool QSeries::agrees_with(const QSeries& other) const {
    Int t = std::min(trunc_, other.trunc_);
    for (const auto& [n, v] : coeffs_) {
        if (n > t) break;
        if (other.coeff(n) != v) return false;
    }
    for (const auto& [n, v] : other.coeffs_) {
        if (n > t) break;
        if (coeff(n) != v) return false;
    }
    return true;
}

QSeries e2(Int N) {
    QSeries f(N);
    f.set_coeff(0, Rat(1));
    if (N == 0) return f;
    // divisor-sum sieve
    std::vector<Int> sig(static_cast<size_t>(N) + 1, 0);
    for (Int d = 1; d <= N; ++d)
        for (Int n = d; n <= N; n += d) sig[static_cast<size_t>(n)] += d;
    for (Int n = 1; n <= N; ++n) f.set_coeff(n, rat(-24 * sig[static_cast<size_t>(n)]));
    return f;
}

QSeries sieve(const QSeries& f, Int M, Int m) {
    if (M < 1) throw std::domain_error("sieve: modulus must be positive");
    m = mod_floor(m, M);
    QSeries out(f.truncation());
    for (const auto& [n, v] : f.coeffs())
        if (n % M == m) out.set_coeff(n, v);
    return out;
}

QSeries v_op(const QSeries& f, Int delta) {
    if (delta < 1) throw std::domain_error("v_op: delta must be positive");
    QSeries out(f.truncation());
    for (const auto& [n, v] : f.coeffs()) {
        if (n * delta > f.truncation()) break;
        out.set_coeff(n * delta, v);
    }
    return out;
}

bool commute_check(const QSeries& f, Int M1, Int M2, Int m) {
    QSeries lhs = sieve(v_op(f, M1), M2, m);
    Int d = gcd_int(M1, M2);
    QSeries rhs(f.truncation());
    if (mod_floor(m, d) == 0) {
        Int mu1 = M1 / d, mu2 = M2 / d;
        Int target = mod_floor(mod_inverse(mu1, mu2) * (m / d), mu2);
        rhs = v_op(sieve(f, mu2, target), M1);
    }
    return lhs.agrees_with(rhs);
}

QSeries theta_series(const FormSpec& form, Int N) {
    QSeries out(N);
    const Int M = form.M;
    const Int r0 = mod_floor(form.r, M);
    const auto& alpha = form.alpha;

    auto residues = [&](Int weight) {
        std::vector<Int> xs;
        if (weight > N) {
            if (r0 == 0) xs.push_back(0);
            return xs;
        }
        Int lim = isqrt(N / weight);
        for (Int x = r0 - ((r0 + lim) / M) * M; x <= lim; x += M)
            if (weight * x * x <= N) xs.push_back(x);
        return xs;
    };

    std::vector<Int> x1s = residues(alpha[0]), x2s = residues(alpha[1]),
                     x3s = residues(alpha[2]), x4s = residues(alpha[3]);

    std::vector<Int> total(static_cast<size_t>(N) + 1, 0);
#pragma omp parallel
    {
        std::vector<Int> local(static_cast<size_t>(N) + 1, 0);
#pragma omp for schedule(dynamic)
        for (size_t i4 = 0; i4 < x4s.size(); ++i4) {
            Int c4 = alpha[3] * x4s[i4] * x4s[i4];
            for (Int x3 : x3s) {
                Int c3 = c4 + alpha[2] * x3 * x3;
                if (c3 > N) continue;
                for (Int x2 : x2s) {
                    Int c2 = c3 + alpha[1] * x2 * x2;
                    if (c2 > N) continue;
                    for (Int x1 : x1s) {
                        Int c1 = c2 + alpha[0] * x1 * x1;
                        if (c1 <= N) ++local[static_cast<size_t>(c1)];
                    }
                }
            }
        }
#pragma omp critical
        for (size_t n = 0; n < total.size(); ++n) total[n] += local[n];
    }
    for (Int n = 0; n <= N; ++n)
        if (total[static_cast<size_t>(n)] != 0) out.set_coeff(n, rat(total[static_cast<size_t>(n)]));
    return out;
}

QSeries eisenstein_component(int m, Int N) {
    QSeries base = e2(N);
    switch (m) {
        case 7:
            return rat(-1, 5760) * sieve(base - v_op(base, 5), 40, 15);
        case 9:
            return rat(-1, 16128) * sieve(base, 56, 39);
        case 10:
            return rat(-1, 6144) * v_op(sieve(base, 16, 7), 4);
        case 11:
            return rat(-1, 41472) * sieve(base, 72, 15);
        case 12: {
            QSeries g = sieve(base, 5, 0) - v_op(base, 5);
            QSeries h = g - v_op(g, 2) + rat(8) * v_op(g, 16) - rat(32) * v_op(g, 32);
            return rat(-1, 2880) * v_op(h, 16);
        }
        case 13:
            return rat(-1, 63360) * sieve(base, 88, 71);
        case 14:
            return rat(-1, 18432) * v_op(sieve(base - v_op(base, 3), 24, 15), 4);
        default:
            throw std::domain_error("eisenstein_component: unsupported m");
    }
}

void write_csv(const QSeries& f, std::ostream& os) {
    os << "n,numerator,denominator\n";
    for (const auto& [n, v] : f.coeffs())
        os << n << "," << v.get_num().get_str() << "," << v.get_den().get_str() << "\n";
}

}  // namespace polyverify
