#pragma once

#include <cstddef>
#include <functional>

namespace ssqw {

/// Runs fn(i) for i in [0, n). threads == 0 picks hardware concurrency,
/// threads == 1 runs inline. Work items must write to disjoint slots so the
/// result does not depend on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace ssqw
