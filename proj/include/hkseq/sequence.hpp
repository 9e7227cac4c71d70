#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkseq/bigint.hpp"
#include "hkseq/exec.hpp"
#include "hkseq/family.hpp"

namespace hkseq {

/**
 * @file sequence.hpp
 * @brief Evaluation of F_s(m,n) by the defining recurrence and by direct
 *        binomial multisection sums.
 */

// Walking state of the difference system: values[i] = F_{i+1}(m).
struct StateVector {
    FamilyParams params;
    std::int64_t m = 0;
    std::vector<BigInt> values;
};

StateVector initial_state(const FamilyParams& params);

// One application of the difference system, in place: values become the
// state at m+1.
void step_inplace(StateVector& state);

// Functional form of step_inplace.
StateVector step(StateVector state);

// Full state at step m (one walk from the initials, O(m*n) big additions).
StateVector state_at(const FamilyParams& params, std::int64_t m);

// F_s(m,n) by m applications of step. Throws std::out_of_range on bad s.
BigInt eval_recurrence(const FamilyParams& params, int s, std::int64_t m);

/**
 * F_s(m,n) as the multisection sum
 *   sum_{t>=0} sigma^t * C(m, n*t + s - 1),    sigma = wrap_sign,
 * with binomials generated incrementally along row m
 * (C(m,k+1) = C(m,k)*(m-k)/(k+1), exact division).
 */
BigInt eval_binomial(const FamilyParams& params, int s, std::int64_t m);

enum class Method { Recurrence, Binomial, Polynomial, Float };

const char* method_name(Method method);
// Throws std::invalid_argument on an unknown name.
Method method_from_name(const std::string& name);

// F_s(m,n) for m = 0..M, plus the method that produced the values.
struct SequenceRecord {
    FamilyParams params;
    int s = 1;
    std::vector<BigInt> values;
    Method method = Method::Recurrence;
};

/**
 * Evaluates F_s(m,n) for m = 0..max_m. The recurrence method walks the
 * state once; the other methods evaluate each m independently and fan out
 * over OpenMP threads in Parallel mode (same values either way).
 */
SequenceRecord sequence(const FamilyParams& params, int s, std::int64_t max_m,
                        Method method, ExecMode mode = ExecMode::Parallel);

}  // namespace hkseq
