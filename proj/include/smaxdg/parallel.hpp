// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_PARALLEL_HPP
#define SMAXDG_PARALLEL_HPP

#include <functional>

namespace smaxdg
{

// Worker count: explicit value if positive, else SMAXDG_THREADS from the environment, else
// the hardware concurrency (at least 1).
int ResolveThreads(int requested);

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index runs exactly once;
// the first exception thrown by any body is rethrown after all workers have stopped.
void ParallelFor(int n, int threads, const std::function<void(int)> &body);

}  // namespace smaxdg

#endif  // SMAXDG_PARALLEL_HPP
