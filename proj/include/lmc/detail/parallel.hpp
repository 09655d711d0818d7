#pragma once

#include <cstddef>
#include <functional>

namespace lmc::detail {

/// Worker cap: min(hardware_concurrency, LMC_THREADS) with LMC_THREADS read
/// once from the environment; at least 1.
unsigned thread_cap();

/// Runs fn(i) for i in [0, n) across up to thread_cap() threads. Callers
/// write results into preallocated slots indexed by i, so the outcome is
/// independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lmc::detail
