#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkseq/exec.hpp"

namespace hkseq {

/**
 * @file verify.hpp
 * @brief Grid verification drivers. Every driver checks a family of exact
 *        identities cell by cell and emits one machine-parsable report line
 *        per cell in a stable order (family outer, then n, then the inner
 *        indices), no matter how the cells were scheduled.
 *
 * Cells are independent, so Parallel mode fans them out over OpenMP
 * threads; Serial mode is the reference implementation and produces the
 * identical report.
 */

struct VerifyReport {
    std::string target;
    std::vector<std::string> lines;
    std::size_t checks = 0;    // asserted grid points
    std::size_t failures = 0;  // asserted grid points that did not hold

    bool ok() const { return failures == 0; }
};

// Three-way method agreement (recurrence / binomial sum / residue-ring
// power) over families x n in 1..max_order x s in 1..n x m in 0..max_m.
// Line: `family n s max_m status`, status `ok` or `fail m=<first>`.
VerifyReport verify_cross(int max_order, std::int64_t max_m, ExecMode mode);

// Addition formula over families x n x i in 1..n x m,s in 0..max_ms.
// Line: `family n i max_ms status`.
VerifyReport verify_addition(int max_order, std::int64_t max_ms, ExecMode mode);

// Circulant determinants over families x n x m in 0..max_m. Line:
// `family n m det status`; status is `ok`/`fail` where the theory asserts
// det = 0 (hyperbolic even n, trigonometric odd n, m >= 1), else `recorded`.
VerifyReport verify_circulant(int max_order, std::int64_t max_m, ExecMode mode);

// Alternating sums over families x n x m in 0..max_m. Line:
// `family n m sum status` with the same asserted/recorded split.
VerifyReport verify_alternating(int max_order, std::int64_t max_m, ExecMode mode);

// Order-5 trigonometric zero pattern over s in 1..5 x m in 0..max_m.
// Line: `K 5 s m actual predicted status` with actual/predicted in
// {zero, nonzero}.
VerifyReport verify_zeros(std::int64_t max_m, ExecMode mode);

}  // namespace hkseq
