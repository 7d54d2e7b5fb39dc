#pragma once

#include <cstddef>
#include <functional>

namespace cevopt {

// Worker count for parallel loops: CEVOPT_THREADS if set to a positive
// integer, otherwise the hardware concurrency. Read from the environment on
// every call so tests can flip it between invocations.
std::size_t worker_thread_count();

// Runs body(i) for i in [0, count) across worker threads. Work items must be
// independent; each writes results into its own slot so that the outcome does
// not depend on scheduling. Exceptions from the body are rethrown here.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cevopt
