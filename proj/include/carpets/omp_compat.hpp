#pragma once

// #include this instead of <omp.h> so the OpenMP pragmas compile (as no-ops)
// even when the compiler runs without -fopenmp.

#if defined(_OPENMP)
#include <omp.h>
namespace carpets {
constexpr bool use_omp = true;
} // namespace carpets
#else
#pragma GCC diagnostic ignored "-Wunknown-pragmas"
namespace carpets {
constexpr bool use_omp = false;
} // namespace carpets
#define omp_get_thread_num() 0
#define omp_get_max_threads() 1
#endif
