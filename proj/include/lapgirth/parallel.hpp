#pragma once

#include <cstddef>
#include <functional>

namespace lapgirth {

inline constexpr const char* kJobsEnvVar = "LAPGIRTH_JOBS";

// LAPGIRTH_JOBS when set to a positive integer, otherwise the hardware
// concurrency (at least 1).
int default_jobs();

// Calls body(i) for i in [0, count) on up to `jobs` threads. Indices are
// handed out dynamically; body must only touch per-index state. The first
// exception thrown by any call is rethrown after all threads finish.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace lapgirth
