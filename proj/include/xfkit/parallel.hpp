#pragma once

#include <cstddef>
#include <functional>

namespace xfkit {

/// Process-wide default worker count (1 unless changed, e.g. by --workers).
std::size_t default_workers();
void set_default_workers(std::size_t workers);

/// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks must
/// write only to their own slot; the first exception is rethrown after all
/// threads join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task, std::size_t workers = 0);

}  // namespace xfkit
