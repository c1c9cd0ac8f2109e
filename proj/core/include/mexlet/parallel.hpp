#ifndef MEXLET_PARALLEL_HPP
#define MEXLET_PARALLEL_HPP

#include <cstddef>

#include <functional>

namespace mexlet {

// Effective worker count: hardware concurrency capped by the NEEDLET_THREADS
// environment variable (values < 1 mean serial).
int max_threads();

// Runs f(i) for i in [0, n).  Work items must be independent; results are
// written to caller-owned slots, so the outcome is identical for any thread
// count.  Reductions over the slots happen serially at the call site.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// explicit worker count (parallel_for passes max_threads())
void parallel_for_threads(std::size_t n, int threads,
                          const std::function<void(std::size_t)>& f);

}  // namespace mexlet

#endif  // MEXLET_PARALLEL_HPP
