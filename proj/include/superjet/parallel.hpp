#ifndef SUPERJET_PARALLEL_HPP
#define SUPERJET_PARALLEL_HPP

#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superjet {

/// Thread count from SUPERJET_THREADS (0 or unset = auto). 1 forces serial.
inline int thread_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("SUPERJET_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Data-parallel loop over [0, n). The serial path is the reference
/// implementation; `parallel = false` runs it unconditionally.
template <typename Fn>
void parallel_for(long n, bool parallel, Fn&& fn) {
#ifdef _OPENMP
    if (parallel && thread_count() > 1) {
        int nt = thread_count();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
#else
    (void)parallel;
#endif
    for (long i = 0; i < n; ++i) fn(i);
}

} // namespace superjet

#endif
