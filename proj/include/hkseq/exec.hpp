#pragma once

namespace hkseq {

// Execution mode for the data-parallel drivers (grid verification, batch
// sequence generation). Serial is the reference implementation; Parallel
// fans the same cell kernels out over OpenMP threads. Both produce
// identical, deterministically ordered results.
enum class ExecMode { Serial, Parallel };

// Number of worker threads a Parallel run would use (1 without OpenMP).
int max_threads();

}  // namespace hkseq
