#ifndef COXREG_PARALLEL_HPP
#define COXREG_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace coxreg {

/// Splits [0, count) into contiguous chunks, one per worker, runs
/// `body(acc, begin, end)` on each, and folds the chunk results left to right
/// with `merge(into, from)`. With an order-respecting merge the result does
/// not depend on the worker count.
template <class Acc, class Body, class Merge>
Acc parallel_chunks(std::uint64_t count, unsigned threads, const Acc& init, Body body, Merge merge) {
  threads = std::max(1U, threads);
  if (threads == 1 || count < 2) {
    Acc acc = init;
    body(acc, std::uint64_t{0}, count);
    return acc;
  }
  const std::uint64_t workers = std::min<std::uint64_t>(threads, count);
  std::vector<Acc> partial(workers, init);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(partial[w], begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc acc = std::move(partial[0]);
  for (std::uint64_t w = 1; w < workers; ++w) merge(acc, std::move(partial[w]));
  return acc;
}

}  // namespace coxreg

#endif  // COXREG_PARALLEL_HPP
