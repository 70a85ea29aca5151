#include "hallpost/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hallpost {

namespace {

int env_cap() {
  const char* raw = std::getenv("HALLPOST_THREADS");
  if (raw == nullptr) return 0;
  const std::string_view text(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) return 0;
  return value;
}

}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int thread_cap() {
#ifdef _OPENMP
  const int available = omp_get_max_threads();
#else
  const int available = 1;
#endif
  const int cap = env_cap();
  return cap > 0 ? std::min(cap, available) : available;
}

}  // namespace hallpost
