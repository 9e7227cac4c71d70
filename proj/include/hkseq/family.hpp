#pragma once

#include <cstdint>
#include <string>

namespace hkseq {

/**
 * @file family.hpp
 * @brief The two function families and the index extension rule.
 *
 * A family of order n is the n-tuple F_1..F_n of integer sequences solving
 *   F_s(m+1) - F_s(m) = F_{s-1}(m)   for s = 2..n,
 *   F_1(m+1) - F_1(m) = eps * F_n(m)
 * with initials F_1(0) = 1, F_s(0) = 0. The hyperbolic family H has wrap
 * sign eps = +1, the trigonometric family K has eps = -1.
 */

enum class Family { Hyperbolic, Trigonometric };

struct FamilyParams {
    Family family = Family::Hyperbolic;
    int order = 1;  // n >= 1

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Sign in the wrap equation F_1(m+1) - F_1(m) = eps * F_n(m).
constexpr int wrap_sign(Family family) {
    return family == Family::Hyperbolic ? +1 : -1;
}
constexpr int wrap_sign(const FamilyParams& params) { return wrap_sign(params.family); }

constexpr char family_letter(Family family) {
    return family == Family::Hyperbolic ? 'H' : 'K';
}

// Throws std::invalid_argument when order < 1.
void validate(const FamilyParams& params);

// Throws std::out_of_range when s is not in 1..order.
void validate_index(const FamilyParams& params, int s);

/**
 * Canonical form of an arbitrary integer index: F_raw = sign * F_canonical
 * with canonical in 1..n. H extends n-periodically (H_{j+n} = H_j), K
 * anti-periodically (K_{j+n} = -K_j); on raw indices 2-n..0 this reduces to
 * H_{-(s-1)} = H_{n-s+1} and K_{-(s-1)} = -K_{n-s+1}.
 */
struct SignedIndex {
    int canonical = 1;  // 1..n
    int sign = +1;      // +1 or -1

    friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

SignedIndex extend_index(const FamilyParams& params, std::int64_t raw_s);

}  // namespace hkseq
