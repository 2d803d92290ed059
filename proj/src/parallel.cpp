// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace smaxdg
{

int ResolveThreads(int requested)
{
  if (requested > 0)
  {
    return requested;
  }
  if (const char *env = std::getenv("SMAXDG_THREADS"))
  {
    try
    {
      const int n = std::stoi(env);
      if (n > 0)
      {
        return n;
      }
    }
    catch (const std::exception &)
    {
      // Fall through to the hardware default.
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(int n, int threads, const std::function<void(int)> &body)
{
  const int workers = std::min(std::max(threads, 1), std::max(n, 1));
  if (workers == 1)
  {
    for (int i = 0; i < n; i++)
    {
      body(i);
    }
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]()
  {
    for (int i = next++; i < n && !failed; i = next++)
    {
      try
      {
        body(i);
      }
      catch (...)
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error)
        {
          error = std::current_exception();
        }
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; w++)
  {
    pool.emplace_back(work);
  }
  work();
  for (auto &t : pool)
  {
    t.join();
  }
  if (error)
  {
    std::rethrow_exception(error);
  }
}

}  // namespace smaxdg
