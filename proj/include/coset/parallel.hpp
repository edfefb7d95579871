// parallel.hpp - process-wide switch between the OpenMP kernels and their
// serial reference implementations.  Both paths produce bit-identical
// results; the switch exists so tests can compare them and the benchmark can
// time them.
#ifndef COSET_PARALLEL_HPP
#define COSET_PARALLEL_HPP

namespace coset::parallel {

// True when the OpenMP execution paths are in use.  Defaults to true in
// builds with OpenMP, false otherwise; set_enabled(true) without OpenMP
// support is a no-op.
bool enabled();
void set_enabled(bool on);

// Worker count the OpenMP paths will use (1 when disabled or unavailable).
int max_threads();

}  // namespace coset::parallel

#endif
