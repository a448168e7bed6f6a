#include "polyverify/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace polyverify {

namespace {

// Multiply poly by (x^d - 1).
std::vector<Int> mul_binomial(const std::vector<Int>& p, Int d) {
    std::vector<Int> out(p.size() + static_cast<size_t>(d), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + static_cast<size_t>(d)] += p[i];
        out[i] -= p[i];
    }
    return out;
}

// Exact division of p by (x^d - 1). Throws if not divisible.
std::vector<Int> div_binomial(const std::vector<Int>& p, Int d) {
    if (p.size() <= static_cast<size_t>(d))
        throw std::logic_error("div_binomial: degree too small");
    std::vector<Int> q(p.size() - static_cast<size_t>(d), 0);
    // p = q*x^d - q  =>  p[j] = q[j-d] - q[j]
    for (size_t j = p.size(); j-- > static_cast<size_t>(d);) {
        Int qj = j < q.size() ? q[j] : 0;
        q[j - static_cast<size_t>(d)] = p[j] + qj;
    }
    for (size_t j = 0; j < static_cast<size_t>(d); ++j) {
        Int qj = j < q.size() ? q[j] : 0;
        if (p[j] != -qj) throw std::logic_error("div_binomial: inexact division");
    }
    return q;
}

std::vector<Int> compute_cyclotomic(Int nu) {
    if (nu == 1) return {-1, 1};
    std::vector<Int> poly{1};
    std::vector<Int> denom_ds;
    for (Int d : divisors(nu)) {
        int mu = moebius(nu / d);
        if (mu == 1)
            poly = mul_binomial(poly, d);
        else if (mu == -1)
            denom_ds.push_back(d);
    }
    for (Int d : denom_ds) poly = div_binomial(poly, d);
    if (poly.size() != static_cast<size_t>(euler_phi(nu)) + 1 || poly.back() != 1)
        throw std::logic_error("compute_cyclotomic: bad degree");
    return poly;
}

struct CycloCache {
    std::shared_mutex mtx;
    std::map<Int, std::unique_ptr<std::vector<Int>>> table;
};

CycloCache& cyclo_cache() {
    static CycloCache cache;
    return cache;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(Int nu) {
    if (nu < 1) throw std::domain_error("cyclotomic_polynomial: order must be positive");
    auto& cache = cyclo_cache();
    {
        std::shared_lock lock(cache.mtx);
        auto it = cache.table.find(nu);
        if (it != cache.table.end()) return *it->second;
    }
    auto poly = std::make_unique<std::vector<Int>>(compute_cyclotomic(nu));
    std::unique_lock lock(cache.mtx);
    auto [it, inserted] = cache.table.emplace(nu, std::move(poly));
    return *it->second;
}

void reduce_mod_cyclotomic(std::vector<Int>& w, Int nu) {
    const auto& f = cyclotomic_polynomial(nu);
    size_t deg = f.size() - 1;  // = phi(nu)
    for (size_t e = w.size(); e-- > deg;) {
        Int coef = w[e];
        if (coef == 0) continue;
        w[e] = 0;
        size_t base = e - deg;
        for (size_t j = 0; j < deg; ++j) {
            if (f[j] != 0) w[base + j] -= coef * f[j];
        }
    }
}

ZCyc zcyc_coerce(const ZCyc& a, Int order) {
    if (order == a.order) return a;
    if (order % a.order != 0)
        throw std::domain_error("zcyc_coerce: target order not a multiple");
    ZCyc out(order);
    Int step = order / a.order;
    for (Int j = 0; j < a.order; ++j)
        out.c[static_cast<size_t>(j * step)] = a.c[static_cast<size_t>(j)];
    return out;
}

ZCyc zcyc_mul(const ZCyc& a, const ZCyc& b) {
    Int order = lcm_int(a.order, b.order);
    ZCyc out(order);
    Int sa = order / a.order, sb = order / b.order;
    for (Int i = 0; i < a.order; ++i) {
        Int ai = a.c[static_cast<size_t>(i)];
        if (ai == 0) continue;
        Int base = i * sa;
        for (Int j = 0; j < b.order; ++j) {
            Int bj = b.c[static_cast<size_t>(j)];
            if (bj == 0) continue;
            Int e = base + j * sb;
            if (e >= order) e -= order;
            out.c[static_cast<size_t>(e)] += ai * bj;
        }
    }
    return out;
}

void zcyc_scale(ZCyc& a, Int s) {
    for (auto& v : a.c) v *= s;
}

void zcyc_rotate(ZCyc& a, Int shift) {
    shift = mod_floor(shift, a.order);
    if (shift == 0) return;
    std::vector<Int> out(a.c.size(), 0);
    for (Int j = 0; j < a.order; ++j) {
        Int e = j + shift;
        if (e >= a.order) e -= a.order;
        out[static_cast<size_t>(e)] = a.c[static_cast<size_t>(j)];
    }
    a.c.swap(out);
}

bool zcyc_is_zero(const ZCyc& a) {
    std::vector<Int> w = a.c;
    reduce_mod_cyclotomic(w, a.order);
    for (Int v : w)
        if (v != 0) return false;
    return true;
}

bool zcyc_equal(const ZCyc& a, const ZCyc& b) {
    Int order = lcm_int(a.order, b.order);
    ZCyc d = zcyc_coerce(a, order);
    const ZCyc bb = zcyc_coerce(b, order);
    for (size_t j = 0; j < d.c.size(); ++j) d.c[j] -= bb.c[j];
    return zcyc_is_zero(d);
}

namespace {

void reduce_mod_cyclotomic_rat(std::vector<Rat>& w, Int nu) {
    const auto& f = cyclotomic_polynomial(nu);
    size_t deg = f.size() - 1;
    for (size_t e = w.size(); e-- > deg;) {
        if (w[e] == 0) continue;
        Rat coef = w[e];
        w[e] = 0;
        size_t base = e - deg;
        for (size_t j = 0; j < deg; ++j) {
            if (f[j] != 0) w[base + j] -= coef * static_cast<long>(f[j]);
        }
    }
}

}  // namespace

CycNum::CycNum(Int order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) throw std::domain_error("CycNum: order must be positive");
    coeffs_.resize(static_cast<size_t>(order_), Rat(0));
    reduce_mod_cyclotomic_rat(coeffs_, order_);
}

CycNum CycNum::from_rat(const Rat& q) {
    CycNum x;
    x.coeffs_[0] = q;
    return x;
}

CycNum CycNum::from_zcyc(const ZCyc& z, const Rat& scale) {
    std::vector<Int> w = z.c;
    reduce_mod_cyclotomic(w, z.order);
    std::vector<Rat> coeffs(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        if (w[j] != 0) coeffs[j] = scale * static_cast<long>(w[j]);
    }
    CycNum x;
    x.order_ = z.order;
    x.coeffs_ = std::move(coeffs);  // already reduced
    return x;
}

bool CycNum::is_zero() const {
    for (const auto& q : coeffs_)
        if (q != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

CycNum CycNum::coerced(Int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw std::domain_error("CycNum::coerced: target order not a multiple");
    std::vector<Rat> out(static_cast<size_t>(new_order), Rat(0));
    Int step = new_order / order_;
    for (Int j = 0; j < order_; ++j)
        out[static_cast<size_t>(j * step)] = coeffs_[static_cast<size_t>(j)];
    return CycNum(new_order, std::move(out));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    Int order = lcm_int(a.order_, b.order_);
    CycNum x = a.coerced(order);
    CycNum y = b.coerced(order);
    for (size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
    return x;  // sum of canonical forms is canonical
}

CycNum operator-(const CycNum& a) {
    CycNum x = a;
    for (auto& q : x.coeffs_) q = -q;
    return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
    Int order = lcm_int(a.order_, b.order_);
    CycNum x = a.coerced(order);
    CycNum y = b.coerced(order);
    std::vector<Rat> prod(static_cast<size_t>(order), Rat(0));
    for (Int i = 0; i < order; ++i) {
        if (x.coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (Int j = 0; j < order; ++j) {
            if (y.coeffs_[static_cast<size_t>(j)] == 0) continue;
            Int e = i + j;
            if (e >= order) e -= order;
            prod[static_cast<size_t>(e)] +=
                x.coeffs_[static_cast<size_t>(i)] * y.coeffs_[static_cast<size_t>(j)];
        }
    }
    return CycNum(order, std::move(prod));
}

CycNum operator*(const Rat& s, const CycNum& a) {
    CycNum x = a;
    for (auto& q : x.coeffs_) q *= s;
    return x;
}

bool operator==(const CycNum& a, const CycNum& b) {
    Int order = lcm_int(a.order_, b.order_);
    return a.coerced(order).coeffs_ == b.coerced(order).coeffs_;
}

std::string CycNum::str() const {
    std::string out;
    bool first = true;
    for (Int j = 0; j < order_; ++j) {
        const Rat& q = coeffs_[static_cast<size_t>(j)];
        if (q == 0) continue;
        if (!first) out += " + ";
        out += rat_str(q);
        if (j > 0) out += "*z" + std::to_string(order_) + "^" + std::to_string(j);
        first = false;
    }
    return first ? "0" : out;
}

CycNum root_of_unity(Int nu, Int j) {
    if (nu < 1) throw std::domain_error("root_of_unity: order must be positive");
    return CycNum::from_zcyc(ZCyc::monomial(nu, j));
}

CycNum eps(Int d) {
    if (mod_floor(d, 2) == 0) throw std::domain_error("eps: argument must be odd");
    return mod_floor(d, 4) == 1 ? CycNum::from_rat(Rat(1)) : root_of_unity(4, 1);
}

std::vector<Int> min_poly(Int nu) { return cyclotomic_polynomial(nu); }

std::complex<double> embed(const CycNum& x) {
    std::complex<double> total(0.0, 0.0);
    double step = 2.0 * std::numbers::pi / static_cast<double>(x.order());
    for (Int j = 0; j < x.order(); ++j) {
        const Rat& q = x.coeff(j);
        if (q == 0) continue;
        double c = q.get_d();
        total += c * std::polar(1.0, step * static_cast<double>(j));
    }
    return total;
}

std::complex<double> embed(const ZCyc& z) {
    std::complex<double> total(0.0, 0.0);
    double step = 2.0 * std::numbers::pi / static_cast<double>(z.order);
    for (Int j = 0; j < z.order; ++j) {
        if (z.c[static_cast<size_t>(j)] == 0) continue;
        total += static_cast<double>(z.c[static_cast<size_t>(j)]) *
                 std::polar(1.0, step * static_cast<double>(j));
    }
    return total;
}

}  // namespace polyverify
