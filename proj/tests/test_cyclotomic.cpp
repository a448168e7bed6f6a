#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyverify/cyclotomic.hpp"

using namespace polyverify;

namespace {

// random element whose order divides `order_pool`, so lcms in mixed-order
// arithmetic stay bounded
CycNum random_cyc(std::mt19937& rng, Int order_pool) {
    auto ds = divisors(order_pool);
    Int nu = ds[rng() % ds.size()];
    std::vector<Rat> coeffs(static_cast<size_t>(nu));
    for (auto& c : coeffs) {
        int num = static_cast<int>(rng() % 11) - 5;
        int den = 1 + static_cast<int>(rng() % 4);
        c = rat(num, den);
    }
    return CycNum(nu, std::move(coeffs));
}

}  // namespace

TEST_CASE("min_poly small orders") {
    CHECK(min_poly(1) == std::vector<Int>{-1, 1});
    CHECK(min_poly(2) == std::vector<Int>{1, 1});
    CHECK(min_poly(4) == std::vector<Int>{1, 0, 1});
    CHECK(min_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
    CHECK(min_poly(3) == std::vector<Int>{1, 1, 1});
    CHECK(min_poly(105).size() == static_cast<size_t>(euler_phi(105)) + 1);
}

TEST_CASE("roots of unity satisfy their minimal polynomial") {
    for (Int nu = 1; nu <= 200; ++nu) {
        // z^nu = 1, built by repeated multiplication
        ZCyc z = ZCyc::monomial(nu, 1);
        ZCyc p = ZCyc::scalar(1);
        for (Int i = 0; i < nu; ++i) p = zcyc_mul(p, z);
        REQUIRE(zcyc_equal(p, ZCyc::scalar(1)));

        // min_poly(nu)(zeta_nu) = 0, exactly and through the numeric embedding
        const auto f = min_poly(nu);
        ZCyc eval(nu);
        for (size_t j = 0; j < f.size(); ++j)
            eval.c[static_cast<size_t>(static_cast<Int>(j) % nu)] += f[j];
        REQUIRE(zcyc_is_zero(eval));
        std::complex<double> acc(0.0, 0.0);
        std::complex<double> zc = std::polar(1.0, 2.0 * 3.14159265358979323846 / static_cast<double>(nu));
        for (size_t j = f.size(); j-- > 0;) acc = acc * zc + static_cast<double>(f[j]);
        REQUIRE(std::abs(acc) < 1e-6);
    }
    // the full CycNum multiplication path at moderate orders
    for (Int nu = 1; nu <= 40; ++nu) {
        CycNum z = root_of_unity(nu, 1);
        CycNum p = CycNum::from_rat(Rat(1));
        for (Int i = 0; i < nu; ++i) p = p * z;
        REQUIRE(p == CycNum::from_rat(Rat(1)));
    }
}

TEST_CASE("root_of_unity basics") {
    CHECK(root_of_unity(1, 0) == CycNum::from_rat(Rat(1)));
    CycNum i = root_of_unity(4, 1);
    CHECK(i.coeff(0) == 0);
    CHECK(i.coeff(1) == 1);
    CycNum sum = root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2);
    CHECK(sum.is_zero());
    // negative exponents normalize
    CHECK(root_of_unity(5, -1) == root_of_unity(5, 4));
}

TEST_CASE("mixed-order arithmetic") {
    // zeta_8^2 = zeta_4
    CHECK(root_of_unity(8, 1) * root_of_unity(8, 1) == root_of_unity(4, 1));
    // zeta_6 = -zeta_3^2
    CHECK(root_of_unity(6, 1) == -(root_of_unity(3, 2)));
    CHECK(rat(0) * root_of_unity(7, 3) == CycNum());
}

TEST_CASE("eps") {
    CHECK(eps(5) == CycNum::from_rat(Rat(1)));
    CHECK(eps(7) == root_of_unity(4, 1));
    CHECK(eps(-1) == root_of_unity(4, 1));  // -1 = 3 mod 4
    CHECK(eps(1) == CycNum::from_rat(Rat(1)));
    CHECK_THROWS_AS(eps(4), std::domain_error);
}

TEST_CASE("embed spot values") {
    auto close = [](std::complex<double> a, std::complex<double> b) {
        return std::abs(a - b) < 1e-12;
    };
    CHECK(close(embed(root_of_unity(4, 1)), {0.0, 1.0}));
    CHECK(close(embed(CycNum::from_rat(Rat(1)) + root_of_unity(2, 1)), {0.0, 0.0}));
}

TEST_CASE("embed is a ring homomorphism") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        CycNum a = random_cyc(rng, 96);
        CycNum b = random_cyc(rng, 96);
        auto lhs = embed(a * b);
        auto rhs = embed(a) * embed(b);
        REQUIRE(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
        REQUIRE(std::abs(embed(a + b) - (embed(a) + embed(b))) < 1e-10);
    }
}

TEST_CASE("exact equality agrees with numeric equality") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 1000; ++trial) {
        CycNum a = random_cyc(rng, 120);
        CycNum b = trial % 3 == 0 ? a.coerced(a.order() * (1 + rng() % 3)) : random_cyc(rng, 120);
        bool exact = (a == b);
        bool numeric = std::abs(embed(a) - embed(b)) < 1e-10;
        REQUIRE(exact == numeric);
    }
}

TEST_CASE("ZCyc representation matches CycNum") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Int nu = 1 + static_cast<Int>(rng() % 60);
        ZCyc z(nu);
        for (auto& c : z.c) c = static_cast<Int>(rng() % 7) - 3;
        ZCyc w = z;
        // multiplying by zeta^s then zeta^(nu-s) is the identity
        Int s = static_cast<Int>(rng() % nu);
        zcyc_rotate(w, s);
        zcyc_rotate(w, nu - s);
        REQUIRE(zcyc_equal(z, w));
        // from_zcyc respects addition of a vanishing full orbit
        ZCyc full = z;
        for (Int j = 0; j < nu; ++j) full.c[static_cast<size_t>(j)] += 1;
        CycNum lhs = CycNum::from_zcyc(full);
        CycNum rhs = CycNum::from_zcyc(z) + (nu == 1 ? CycNum::from_rat(Rat(1)) : CycNum());
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("zcyc_mul cross-checked by embedding") {
    std::mt19937 rng(1312);
    for (int trial = 0; trial < 200; ++trial) {
        Int na = 1 + static_cast<Int>(rng() % 40);
        Int nb = 1 + static_cast<Int>(rng() % 40);
        ZCyc a(na), b(nb);
        for (auto& c : a.c) c = static_cast<Int>(rng() % 5) - 2;
        for (auto& c : b.c) c = static_cast<Int>(rng() % 5) - 2;
        ZCyc p = zcyc_mul(a, b);
        auto lhs = embed(p);
        auto rhs = embed(a) * embed(b);
        REQUIRE(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
}
