#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace commalg {

/// Calls fn(i) for every i in [0, count) on up to `jobs` threads, index i on
/// worker i % jobs. Callers write into per-index slots, so the merged result
/// never depends on scheduling. The first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace commalg
