#pragma once

#include <cstddef>
#include <functional>

namespace qgrass {

/// How independent work items (content blocks, shifts, words) are scheduled.
/// The serial path is the reference; the parallel path must produce
/// identical results.
enum class ExecPolicy { serial, parallel };

/// Runs body(i) for i in [0, count). With ExecPolicy::parallel and OpenMP
/// available the iterations are distributed dynamically across threads.
/// Exceptions thrown by body are rethrown (the first one) after the loop.
void parallel_for(std::size_t count, ExecPolicy policy, const std::function<void(std::size_t)>& body);

/// Number of worker threads the parallel policy would use.
int max_threads();

} // namespace qgrass
