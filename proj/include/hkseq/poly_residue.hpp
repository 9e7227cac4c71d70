#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hkseq/bigint.hpp"
#include "hkseq/family.hpp"

namespace hkseq {

/**
 * @file poly_residue.hpp
 * @brief Integer-exact closed form: F_s(m,n) is the coefficient of x^{s-1}
 *        in (x+1)^m reduced modulo x^n - eps, eps = wrap_sign. Binary
 *        exponentiation makes this the fast path for large m.
 */

// Polynomial in Z[x]/(x^n - eps), canonical degree-<n coefficient vector.
struct PolyResidue {
    int order = 1;    // n
    int epsilon = 1;  // modulus x^n - epsilon
    std::vector<BigInt> coeffs;  // coeffs[k] = coefficient of x^k, size n

    friend bool operator==(const PolyResidue&, const PolyResidue&) = default;
};

// The multiplicative identity of the ring.
PolyResidue residue_one(int order, int epsilon);

// x + 1 reduced into the ring (for n = 1 this is the constant 1 + eps).
PolyResidue residue_binomial_base(int order, int epsilon);

// Canonical product; x^{n+k} folds to eps * x^k. Schoolbook O(n^2) big
// multiplications; n stays small while the coefficients get huge. Throws
// std::invalid_argument when the ring parameters differ.
PolyResidue residue_mul(const PolyResidue& a, const PolyResidue& b);

/**
 * (x+1)^m in Z[x]/(x^n - eps) by left-to-right binary exponentiation,
 * at most 2*floor(log2 m) ring multiplications. When mul_count is non-null
 * it receives the number of ring multiplications performed.
 */
PolyResidue binom_power_mod(int order, int epsilon, std::int64_t m,
                            std::size_t* mul_count = nullptr);

// F_s(m,n) read off as a coefficient of binom_power_mod.
BigInt eval_poly(const FamilyParams& params, int s, std::int64_t m);

}  // namespace hkseq
