#ifndef ROBERTSON_PARALLEL_HPP
#define ROBERTSON_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace robertson {

// Worker cap: ROBERTSON_THREADS env var, else the OpenMP default.
inline int worker_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("ROBERTSON_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Parallel map over [0, count): each body(i) must be independent (all solvers
// in this project are pure over immutable inputs).  Output ordering is the
// caller's responsibility; indices arrive in deterministic slots.
template <typename F>
void parallel_for(long count, F&& body, bool serial = false) {
#ifdef _OPENMP
    if (!serial) {
        const int nw = worker_count();
#pragma omp parallel for schedule(dynamic) num_threads(nw)
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
#endif
    (void)serial;
    for (long i = 0; i < count; ++i) body(i);
}

}  // namespace robertson

#endif
