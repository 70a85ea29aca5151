#pragma once

// Thin wrapper so kernels can use OpenMP when it is compiled in.

namespace hallpost {

/// Thread count for parallel kernels: omp_get_max_threads(), capped by the
/// HALLPOST_THREADS environment variable. Always 1 without OpenMP.
int thread_cap();

bool openmp_enabled();

}  // namespace hallpost
