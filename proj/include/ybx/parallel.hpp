#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ybx {

/// Worker cap: YBX_THREADS when set, otherwise the OpenMP default.
inline int worker_count() {
#ifdef _OPENMP
    int max = omp_get_max_threads();
    if (const char* env = std::getenv("YBX_THREADS")) {
        int req = std::atoi(env);
        if (req >= 1 && req < max) max = req;
    }
    return max;
#else
    return 1;
#endif
}

/// Data-parallel loop over [0, count). `parallel = false` is the serial
/// reference path; results must not depend on iteration order.
template <class F>
void parallel_for(long long count, F&& body, bool parallel = true) {
#ifdef _OPENMP
    if (parallel && count > 1) {
        int threads = worker_count();
        // shards can be very uneven (search subtrees die early), so hand
        // them out dynamically
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < count; ++i) body(i);
        return;
    }
#else
    (void)parallel;
#endif
    for (long long i = 0; i < count; ++i) body(i);
}

} // namespace ybx
