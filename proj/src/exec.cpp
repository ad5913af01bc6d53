#include "qgrass/exec.hpp"

#include <exception>
#include <mutex>

#ifdef QGRASS_HAVE_OPENMP
#include <omp.h>
#endif

namespace qgrass {

void parallel_for(std::size_t count, ExecPolicy policy, const std::function<void(std::size_t)>& body) {
  if (policy == ExecPolicy::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
#ifdef QGRASS_HAVE_OPENMP
  std::exception_ptr first;
  std::mutex guard;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
#else
  for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

int max_threads() {
#ifdef QGRASS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace qgrass
