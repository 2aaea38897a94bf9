#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace levyopt::par {

// Worker cap: LEVY_OPT_THREADS when set and positive, hardware concurrency
// otherwise. The cap affects wall time only, never results.
inline int worker_count() {
  if (const char* env = std::getenv("LEVY_OPT_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<int>(std::min(n, 512L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline constexpr std::int64_t kBlockSize = 8192;

namespace detail {

template <std::size_t K>
std::array<double, K> reduce_pairwise(const std::vector<std::array<double, K>>& blocks,
                                      std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return blocks[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  auto left = reduce_pairwise(blocks, lo, mid);
  const auto right = reduce_pairwise(blocks, mid, hi);
  for (std::size_t i = 0; i < K; ++i) left[i] += right[i];
  return left;
}

}  // namespace detail

// Splits [0, n) into fixed-size blocks, evaluates block_fn(lo, hi) ->
// array<double, K> per block (possibly on several threads), and combines the
// per-block sums pairwise in block order. Fixed blocks plus an ordered
// pairwise reduction make the result identical for any worker count.
template <std::size_t K, typename BlockFn>
std::array<double, K> map_reduce_blocks(std::int64_t n, BlockFn&& block_fn) {
  if (n <= 0) return std::array<double, K>{};
  const std::int64_t nblocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<std::array<double, K>> partials(static_cast<std::size_t>(nblocks));
  const int workers = static_cast<int>(std::min<std::int64_t>(worker_count(), nblocks));
  if (workers <= 1) {
    for (std::int64_t blk = 0; blk < nblocks; ++blk)
      partials[static_cast<std::size_t>(blk)] =
          block_fn(blk * kBlockSize, std::min(n, (blk + 1) * kBlockSize));
  } else {
    std::atomic<std::int64_t> next{0};
    auto run = [&] {
      for (;;) {
        const std::int64_t blk = next.fetch_add(1);
        if (blk >= nblocks) return;
        partials[static_cast<std::size_t>(blk)] =
            block_fn(blk * kBlockSize, std::min(n, (blk + 1) * kBlockSize));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  return detail::reduce_pairwise<K>(partials, 0, partials.size());
}

// Runs block_fn(lo, hi) over a fixed partition of [0, n) with no reduction;
// block_fn must only touch state owned by its index range.
template <typename BlockFn>
void for_blocks(std::int64_t n, BlockFn&& block_fn) {
  if (n <= 0) return;
  const std::int64_t nblocks = (n + kBlockSize - 1) / kBlockSize;
  const int workers = static_cast<int>(std::min<std::int64_t>(worker_count(), nblocks));
  if (workers <= 1) {
    for (std::int64_t blk = 0; blk < nblocks; ++blk)
      block_fn(blk * kBlockSize, std::min(n, (blk + 1) * kBlockSize));
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::int64_t blk = next.fetch_add(1);
      if (blk >= nblocks) return;
      block_fn(blk * kBlockSize, std::min(n, (blk + 1) * kBlockSize));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

}  // namespace levyopt::par
