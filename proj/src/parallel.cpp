// parallel.cpp - runtime toggle for the OpenMP execution paths.
#include "coset/parallel.hpp"

#include <atomic>

#ifdef COSET_HAVE_OPENMP
#include <omp.h>
#endif

namespace coset::parallel {

namespace {
#ifdef COSET_HAVE_OPENMP
std::atomic<bool> g_enabled{true};
#else
std::atomic<bool> g_enabled{false};
#endif
}  // namespace

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

void set_enabled(bool on) {
#ifndef COSET_HAVE_OPENMP
  on = false;
#endif
  g_enabled.store(on, std::memory_order_relaxed);
}

int max_threads() {
#ifdef COSET_HAVE_OPENMP
  return enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace coset::parallel
