#pragma once

#include <cstdint>
#include <vector>

#include "hkseq/family.hpp"
#include "hkseq/sequence.hpp"

namespace hkseq {

// One timed evaluation. value_hash must agree across methods for identical
// (family, n, s, m); a disagreement is a correctness bug, not a benchmark
// artifact.
struct BenchResult {
    Method method = Method::Recurrence;
    FamilyParams params;
    int s = 1;
    std::int64_t m = 0;
    double seconds = 0.0;
    std::uint64_t value_hash = 0;
};

struct BenchRun {
    std::vector<BenchResult> results;  // method-major, m ascending
    bool hashes_agree = true;
};

/**
 * Times each method at each m. The recurrence method is timed as one walk
 * to max(m_list) with cumulative split times at the checkpoints; the other
 * methods evaluate each m from scratch. Throws std::invalid_argument on an
 * empty method or m list.
 */
BenchRun run_bench(const FamilyParams& params, int s, std::vector<std::int64_t> m_list,
                   const std::vector<Method>& methods);

}  // namespace hkseq
