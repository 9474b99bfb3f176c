#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "radgen/compensated_sum.hpp"

namespace radgen {

// Block width for partitioned reductions. Block boundaries never depend on
// the thread count, so a reduction is bit-identical for any `threads` value.
inline constexpr std::uint64_t kReductionBlock = 1u << 15;

struct ExecutionPolicy {
  unsigned threads = 1;
};

// Runs body(block_index) for every block in [0, blocks) on up to `threads`
// workers. The first exception thrown by any worker is rethrown.
inline void for_each_block(std::size_t blocks, unsigned threads,
                           const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < blocks; b = next++) {
        try {
          body(b);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = blocks;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Compensated sum of term(i) for i in [first, last], reduced block by block in
// ascending order.
template <class Term>
double deterministic_sum(std::uint64_t first, std::uint64_t last,
                         const ExecutionPolicy& policy, Term&& term) {
  if (last < first) return 0.0;
  const std::uint64_t count = last - first + 1;
  const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
  std::vector<CompensatedSum> partial(blocks);
  for_each_block(blocks, policy.threads, [&](std::size_t b) {
    const std::uint64_t lo = first + b * kReductionBlock;
    const std::uint64_t hi = std::min(last, lo + kReductionBlock - 1);
    CompensatedSum acc;
    for (std::uint64_t i = lo; i <= hi; ++i) acc.add(term(i));
    partial[b] = acc;
  });
  CompensatedSum total;
  for (const auto& p : partial) total.merge(p);
  return total.value();
}

// Multi-channel version: visit(i, accumulators) adds into N sums at once.
template <std::size_t N, class Visit>
std::array<double, N> deterministic_sums(std::uint64_t first, std::uint64_t last,
                                         const ExecutionPolicy& policy,
                                         Visit&& visit) {
  std::array<double, N> out{};
  if (last < first) return out;
  const std::uint64_t count = last - first + 1;
  const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
  std::vector<std::array<CompensatedSum, N>> partial(blocks);
  for_each_block(blocks, policy.threads, [&](std::size_t b) {
    const std::uint64_t lo = first + b * kReductionBlock;
    const std::uint64_t hi = std::min(last, lo + kReductionBlock - 1);
    std::array<CompensatedSum, N> acc{};
    for (std::uint64_t i = lo; i <= hi; ++i) visit(i, acc);
    partial[b] = acc;
  });
  std::array<CompensatedSum, N> total{};
  for (const auto& p : partial)
    for (std::size_t k = 0; k < N; ++k) total[k].merge(p[k]);
  for (std::size_t k = 0; k < N; ++k) out[k] = total[k].value();
  return out;
}

// Produces chunks concurrently and hands them to `consume` strictly in chunk
// order on the calling thread.
template <class Chunk>
void ordered_parallel(std::size_t chunks, unsigned threads,
                      const std::function<Chunk(std::size_t)>& produce,
                      const std::function<void(Chunk&&)>& consume) {
  if (threads <= 1 || chunks <= 1) {
    for (std::size_t i = 0; i < chunks; ++i) consume(produce(i));
    return;
  }
  std::mutex mutex;
  std::condition_variable ready;
  std::vector<std::optional<Chunk>> slots(chunks);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;

  // Bound the number of produced-but-unconsumed chunks.
  const std::size_t window = 4 * static_cast<std::size_t>(threads);
  std::size_t consumed = 0;
  std::condition_variable space;

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      while (!abort) {
        const std::size_t i = next++;
        if (i >= chunks) break;
        {
          std::unique_lock lock(mutex);
          space.wait(lock, [&] { return abort || i < consumed + window; });
          if (abort) break;
        }
        try {
          Chunk c = produce(i);
          std::lock_guard lock(mutex);
          slots[i] = std::move(c);
        } catch (...) {
          std::lock_guard lock(mutex);
          if (!failure) failure = std::current_exception();
          abort = true;
        }
        ready.notify_all();
      }
    });
  }
  try {
    for (std::size_t i = 0; i < chunks; ++i) {
      std::optional<Chunk> c;
      {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return abort || slots[i].has_value(); });
        if (abort) break;
        c = std::move(slots[i]);
        slots[i].reset();
        consumed = i + 1;
      }
      space.notify_all();
      consume(std::move(*c));
    }
  } catch (...) {
    std::lock_guard lock(mutex);
    if (!failure) failure = std::current_exception();
    abort = true;
  }
  abort = true;
  space.notify_all();
  ready.notify_all();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace radgen
