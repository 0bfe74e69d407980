#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace speck {

/// Runs fn(begin, end, lane) over `workers` contiguous chunks of [0, n).
/// Lane 0 executes on the calling thread, every other lane on its own
/// thread; all lanes are joined before returning.  Chunk boundaries depend
/// only on (n, workers), so deterministic kernels stay deterministic.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t, std::size_t, int)>& fn);

/// Sum with a fixed-shape pairwise tree.  The reduction order depends only
/// on values.size(), never on worker count, so results are reproducible.
double pairwise_sum(std::span<const double> values);

} // namespace speck
