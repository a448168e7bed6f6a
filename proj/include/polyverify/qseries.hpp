#pragma once

#include <map>
#include <ostream>

#include "polyverify/arith.hpp"
#include "polyverify/polygonal.hpp"

namespace polyverify {

// Truncated q-expansion with exact rational coefficients. Coefficients are
// stored sparsely; an absent index is zero. All indices lie in [0, truncation].
class QSeries {
  public:
    explicit QSeries(Int truncation) : trunc_(truncation) {
        if (truncation < 0) throw std::domain_error("QSeries: negative truncation");
    }

    Int truncation() const { return trunc_; }

    Rat coeff(Int n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void set_coeff(Int n, const Rat& v) {
        if (n < 0 || n > trunc_) throw std::out_of_range("QSeries::set_coeff: index");
        if (v == 0)
            coeffs_.erase(n);
        else
            coeffs_[n] = v;
    }

    const std::map<Int, Rat>& coeffs() const { return coeffs_; }

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries& operator*=(const Rat& s);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const Rat& s, QSeries a) { return a *= s; }

    // Exact coefficient equality on the common truncation.
    bool agrees_with(const QSeries& other) const;

  private:
    Int trunc_;
    std::map<Int, Rat> coeffs_;
};

// E_2 = 1 - 24 sum sigma(n) q^n, truncated at N.
QSeries e2(Int N);

// Keep coefficients with index = m (mod M), zero the rest.
QSeries sieve(const QSeries& f, Int M, Int m);

// Send q^n to q^(delta n); indices beyond the truncation are dropped.
QSeries v_op(const QSeries& f, Int delta);

// The V-then-sieve commutation law: f|V_M1|S_{M2,m} equals
// f|S_{mu2, inv(mu1) m/d}|V_M1 when d = gcd(M1,M2) divides m, else 0.
bool commute_check(const QSeries& f, Int M1, Int M2, Int m);

// Generating series of s_{r,M,alpha}; forward lattice enumeration, OpenMP
// over the heaviest coordinate, result independent of worker count.
QSeries theta_series(const FormSpec& form, Int N);

// The Eisenstein component of theta_series(FormSpec::for_m(m)) as the sieved
// and V-shifted E_2 combination for that m; supported m: 7, 9, 10, 11, 12, 13, 14.
QSeries eisenstein_component(int m, Int N);

// CSV rows "n,numerator,denominator" for the nonzero coefficients.
void write_csv(const QSeries& f, std::ostream& os);

}  // namespace polyverify
