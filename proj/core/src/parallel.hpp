#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace droot::detail {

/// Splits [0, total) into contiguous chunks, runs fn(begin, end) on each in
/// its own thread and returns the results in chunk order.
template <class Fn>
auto run_partitioned(std::uint64_t total, unsigned threads, Fn fn) {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  // Small spaces are not worth a thread.
  constexpr std::uint64_t kMinChunk = 1u << 14;
  const std::uint64_t max_chunks = std::max<std::uint64_t>(1, total / kMinChunk);
  const auto chunks = static_cast<unsigned>(std::min<std::uint64_t>(threads, max_chunks));

  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = fn(0, total);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
      const std::uint64_t begin = total * c / chunks;
      const std::uint64_t end = total * (c + 1) / chunks;
      workers.emplace_back([&, c, begin, end] {
        try {
          results[c] = fn(begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// a * b, saturating at UINT64_MAX.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_mul_overflow(a, b, &out) ? UINT64_MAX : out;
}

}  // namespace droot::detail
