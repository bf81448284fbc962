#ifndef DELTAGAMES_PARALLEL_HPP
#define DELTAGAMES_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace deltagames {

// Worker count from DELTA_GAMES_THREADS; unset, empty or 0 means one worker
// per hardware thread.
std::size_t default_thread_count();

// Runs body(i) for i in [0, count) on up to `threads` workers (0 = default).
// Each index runs exactly once; callers write results to slot i so the
// outcome does not depend on scheduling. If any body throws, the exception
// from the lowest failing index is rethrown after all workers finish.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace deltagames

#endif  // DELTAGAMES_PARALLEL_HPP
