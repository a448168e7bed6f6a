#include "polyverify/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polyverify {

Rat rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

Int lcm_int(Int a, Int b) { return std::lcm(a, b); }

Int mod_floor(Int a, Int m) {
    if (m < 1) throw std::domain_error("mod_floor: modulus must be positive");
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int isqrt(Int n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n == 0) return 0;
    Int s = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

bool is_square(Int n) {
    if (n < 0) return false;
    Int s = isqrt(n);
    return s * s == n;
}

Int sigma(Int n, unsigned k) {
    if (n <= 0) return 0;
    Int total = 0;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int q = n / d;
        Int dp = 1, qp = 1;
        for (unsigned i = 0; i < k; ++i) {
            dp *= d;
            qp *= q;
        }
        total += dp;
        if (q != d) total += qp;
    }
    return total;
}

Int sigma_div(Int n, Int d, unsigned k) {
    if (d <= 0 || n % d != 0) return 0;
    return sigma(n / d, k);
}

Rat sigma(const Rat& x, unsigned k) {
    if (x.get_den() != 1 || x.get_num() <= 0) return Rat(0);
    if (!x.get_num().fits_slong_p())
        throw std::domain_error("sigma: argument out of supported range");
    return Rat(static_cast<long>(sigma(static_cast<Int>(x.get_num().get_si()), k)));
}

int kronecker(Int a, Int n) {
    BigInt aa(static_cast<long>(a)), nn(static_cast<long>(n));
    return mpz_kronecker(aa.get_mpz_t(), nn.get_mpz_t());
}

Int mod_inverse(Int a, Int b) {
    if (b < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    if (b == 1) return 0;
    Int r = mod_floor(a, b);
    // extended Euclid on (r, b)
    Int old_r = r, cur_r = b;
    Int old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        Int q = old_r / cur_r;
        Int t = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = t;
        t = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = t;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return mod_floor(old_s, b);
}

TwoAdicSplit two_adic_split(Int n) {
    if (n < 1) throw std::domain_error("two_adic_split: argument must be positive");
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return {v, n};
}

Int euler_phi(Int n) {
    if (n < 1) throw std::domain_error("euler_phi: argument must be positive");
    Int result = n;
    for (Int p : prime_factors(n)) result -= result / p;
    return result;
}

int moebius(Int n) {
    if (n < 1) throw std::domain_error("moebius: argument must be positive");
    int factors = 0;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

std::vector<Int> divisors(Int n) {
    if (n < 1) throw std::domain_error("divisors: argument must be positive");
    std::vector<Int> ds;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<Int> prime_factors(Int n) {
    if (n < 1) throw std::domain_error("prime_factors: argument must be positive");
    std::vector<Int> ps;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace polyverify
