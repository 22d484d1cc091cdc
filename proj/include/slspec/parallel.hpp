#ifndef SLSPEC_PARALLEL_HPP
#define SLSPEC_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace slspec::par {

// Worker-thread cap for all data-parallel loops.  0 means "hardware".
// Results are written to preassigned slots indexed by the loop variable,
// so the outcome is independent of the thread count.
int  max_threads();
void set_max_threads(int n);

// Static-partition parallel loop over [0, n).
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

} // namespace slspec::par

#endif
