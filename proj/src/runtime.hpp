#ifndef LINIDEAL_RUNTIME_HPP
#define LINIDEAL_RUNTIME_HPP

#include <cstddef>
#include <functional>

namespace linideal {

// Process-wide worker count for parallel_for. Default 1 (sequential).
void set_thread_count(int threads);
int thread_count();

// Runs fn(i) for i in [0, count). Work items must be independent; each item
// writes only to its own slot so results are identical for any thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace linideal

#endif
