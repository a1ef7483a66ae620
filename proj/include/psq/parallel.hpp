#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace psq {

// Splits [lo, hi) into fixed-size blocks, maps each block with `fn`,
// and folds the per-block results in block order. Block boundaries do
// not depend on the thread count, so reductions of floating-point sums
// are bit-identical whether run on one thread or many.
template <class Result, class BlockFn, class Fold>
Result map_blocks_ordered(std::uint64_t lo, std::uint64_t hi,
                          std::uint64_t block_size, int threads, Result init,
                          BlockFn fn, Fold fold) {
  if (hi <= lo) return init;
  const std::uint64_t nblocks = (hi - lo + block_size - 1) / block_size;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned nthreads = threads > 0 ? static_cast<unsigned>(threads) : hw;
  nthreads = static_cast<unsigned>(
      std::min<std::uint64_t>(nthreads, nblocks));

  std::vector<Result> partial(nblocks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t b = next.fetch_add(1); b < nblocks && !failed;
           b = next.fetch_add(1)) {
        const std::uint64_t blo = lo + b * block_size;
        const std::uint64_t bhi = std::min(hi, blo + block_size);
        partial[b] = fn(blo, bhi);
      }
    } catch (...) {
      std::lock_guard<std::mutex> g(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };

  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  Result acc = std::move(init);
  for (auto& p : partial) acc = fold(std::move(acc), std::move(p));
  return acc;
}

}  // namespace psq
