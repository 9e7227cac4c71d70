#pragma once

#include <complex>
#include <cstdint>

#include "hkseq/bigint.hpp"
#include "hkseq/family.hpp"

namespace hkseq {

/**
 * @file analytic.hpp
 * @brief Floating-point evaluation of the complex closed forms
 *
 *   H_s(m,n) = (1/n) sum_{j=1..n} omega^{(1-s)j} (omega^j + 1)^m
 *   K_s(m,n) = (1/n) sum_{j=1..n} mu^{(1-s)(2j-1)} (mu^{2j-1} + 1)^m
 *
 * with omega = exp(2*pi*i/n), mu = exp(pi*i/n), plus the five golden-ratio
 * formulas for K_s(m,5) and the order-5 zero classification.
 *
 * The sums are evaluated literally, term by term, in extended precision
 * (mantissa grows with m) so that cancellation down to an exact zero still
 * leaves a residual far below the 1e-9 tolerance; the reported value and
 * imaginary residual are doubles, which is why m is capped at 900.
 */

struct RootOfUnityBasis {
    int order = 1;
    std::complex<double> omega;  // exp(2*pi*i/n)
    std::complex<double> mu;     // exp(pi*i/n), mu^2 == omega
};

RootOfUnityBasis make_basis(int order);

struct FloatEval {
    double value = 0.0;          // real part of the sum
    double imag_residual = 0.0;  // magnitude of the discarded imaginary part
    BigInt rounded;              // nearest integer
};

inline constexpr std::int64_t kMaxFloatStep = 900;

// Throws std::domain_error unless 0 <= m <= kMaxFloatStep (2^m must stay
// inside double range for the reported value).
void analytic_check_range(std::int64_t m);

FloatEval eval_roots_of_unity(const FamilyParams& params, int s, std::int64_t m);

/**
 * K_s(m,5) = (2/5)(phi+2)^{m/2} (cos(pi(m-2(s-1))/10)
 *            + (phi-1)^m cos(3pi(m-2(s-1))/10)),  phi the golden ratio.
 * Valid for m >= 1 only; m = 0 is rejected (the formula drops the summand
 * that the initial values need there).
 */
FloatEval eval_k5_formula(int s, std::int64_t m);

// The order-5 zero pattern: true iff K_s(m,5) = 0.
//   s=1: m = 5 (mod 10)          s=2: m = 0 or m = 7 (mod 10)
//   s=3: m in {0,1} or m = 9     s=4: m in {0,2} or m = 1 (mod 10)
//   s=5: m in {0,1,2} or m = 3 (mod 10)
bool k5_zero_class(int s, std::int64_t m);

}  // namespace hkseq
