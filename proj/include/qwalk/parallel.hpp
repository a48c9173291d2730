#pragma once

#include <cstddef>

namespace qwalk {

/// Selects the OpenMP kernels or their single-threaded counterparts.
/// Both produce identical results; the serial path is kept for testing
/// and benchmarking.
enum class Execution { serial, parallel };

// Below this many work items a parallel region costs more than it saves.
inline constexpr std::size_t kParallelGrain = 2048;

constexpr bool run_parallel(Execution exec, std::size_t items) {
  return exec == Execution::parallel && items >= kParallelGrain;
}

}  // namespace qwalk
