#pragma once

#include <cstdint>
#include <vector>

#include "hkseq/bigint.hpp"
#include "hkseq/family.hpp"

namespace hkseq {

/**
 * @file identities.hpp
 * @brief Exact checks of the addition formulas and the circulant
 *        determinant identities.
 */

/**
 * Addition formula, checked exactly:
 *   F_i(m+s, n) == sum_{j=1..n} F_j(s,n) * F_{i-j+1}(m,n)
 * where the out-of-range index i-j+1 resolves through extend_index.
 */
bool check_addition(const FamilyParams& params, int i, std::int64_t m, std::int64_t s);

// sum_{i=1..n} (-1)^{i-1} F_i(m,n). Vanishes for m >= 1 when the family is
// hyperbolic with even n or trigonometric with odd n.
BigInt alternating_sum(const FamilyParams& params, std::int64_t m);

// Circulant with first row (-1)^{i-1} F_i(m,n); row r is the cyclic right
// shift of the first row by r.
struct CirculantSpec {
    FamilyParams params;
    std::int64_t m = 0;
    std::vector<BigInt> first_row;
};

CirculantSpec build_circulant(const FamilyParams& params, std::int64_t m);

// Full n x n matrix, entry (r, c) = first_row[(c - r) mod n].
std::vector<std::vector<BigInt>> materialize(const CirculantSpec& spec);

// Exact integer determinant by fraction-free (Bareiss) elimination. The
// complex eigenvalue product is deliberately not used here; it serves as an
// independent cross-check in the tests.
BigInt circulant_det(const CirculantSpec& spec);

// Bareiss elimination of an arbitrary square integer matrix (consumed).
BigInt det_bareiss(std::vector<std::vector<BigInt>> mat);

// True when the determinant is asserted to vanish: hyperbolic with even n,
// or trigonometric with odd n, both for m >= 1.
constexpr bool det_vanishes_by_theory(const FamilyParams& params, std::int64_t m) {
    const bool even_order = params.order % 2 == 0;
    return m >= 1 &&
           (params.family == Family::Hyperbolic ? even_order : !even_order);
}

}  // namespace hkseq
