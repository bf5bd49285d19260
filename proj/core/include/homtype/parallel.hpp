#ifndef HOMTYPE_PARALLEL_HPP
#define HOMTYPE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace homtype {

/// Worker count used by parallel_for. Resolution order: explicit set_threads()
/// (CLI flag), HOMTYPE_THREADS environment variable, hardware concurrency.
int thread_count();
void set_threads(int n);

/// Runs fn(i) for i in [0, n). Each index writes only its own output slot, so
/// the split across workers never affects results; reductions over the slots
/// must use a fixed-order tree (see reduce.hpp).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace homtype

#endif
