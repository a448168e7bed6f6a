#pragma once

#include <array>
#include <optional>
#include <vector>

#include "polyverify/arith.hpp"

namespace polyverify {

using Alpha = std::array<Int, 4>;
inline constexpr Alpha kAlpha1248{1, 2, 4, 8};

// Diagonal form data: counts x in Z^4 with sum alpha_j x_j^2 = n, x_j = r mod M.
struct FormSpec {
    Alpha alpha = kAlpha1248;
    Int r = 0;
    Int M = 1;
    std::optional<int> m;  // source polygon index when the form arises from one

    Int level() const;         // 4 * lcm(alpha)
    Int discriminant() const;  // 2^4 * prod(alpha)

    static FormSpec for_m(int m);  // (r, M) = (m, 2(m-2)), alpha = (1,2,4,8)
};

// l-th generalized m-gonal number, l ranging over all of Z.
Int polygonal_number(Int m, Int l);

// Number of l in Z with polygonal_number(m, l) == value.
int polygonal_preimage_count(Int m, Int value);

// r_{m,alpha}(n): representations of n as sum alpha_j * p_m(l_j).
Int count_r(Int m, const Alpha& alpha, Int n);
bool exists_r(Int m, const Alpha& alpha, Int n);
bool exists_r(Int m, const Alpha& alpha, Int n, std::array<Int, 4>* witness);

// s_{r,M,alpha}(n): representations with the congruence condition.
Int count_s(Int r, Int M, const Alpha& alpha, Int n);
bool exists_s(Int r, Int M, const Alpha& alpha, Int n, std::array<Int, 4>* witness = nullptr);

// Both sides of the completing-the-square correspondence:
// r_{m,(1,2,4,8)}(n) == s_{m,2(m-2),(1,2,4,8)}(8(m-2)n + 15(m-4)^2).
bool check_relation(Int m, Int n);

struct VerifyReport {
    Int m = 0;
    Int n_max = 0;
    std::vector<Int> failures;  // n with no representation, ascending
    struct Witness {
        Int n;
        std::array<Int, 4> ells;
    };
    std::vector<Witness> witness_samples;
};

// Scans n = 1..n_max for unrepresentable values (OpenMP over n-ranges;
// result independent of the worker count).
VerifyReport verify_conjecture(Int m, Int n_max);

// If x^2+2y^2+4z^2+8w^2 = n is solvable with coordinates 12 mod 20, then so
// is the same equation for 256n. Vacuously true when n is not represented.
bool descent_check_m12(Int n);

struct DescentWitness {
    Int n;
    std::array<Int, 4> x;        // solution for n
    std::array<Int, 4> x_scaled;  // solution for 256n
};
std::optional<DescentWitness> descent_witness_m12(Int n);

namespace ref {
// Plain box-enumeration reference implementations (serial); these are the
// oracles the pruned kernels are tested against.
Int count_r(Int m, const Alpha& alpha, Int n);
Int count_s(Int r, Int M, const Alpha& alpha, Int n);
}  // namespace ref

}  // namespace polyverify
