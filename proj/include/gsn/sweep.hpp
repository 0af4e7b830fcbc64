#pragma once

#include <cstddef>
#include <vector>

namespace gsn {

// Maps fn over 0..count-1, optionally with OpenMP. Results land in an
// index-ordered vector, so serial and parallel execution produce identical
// output. fn must not throw when parallel is true.
template <class Fn>
auto run_indexed(long count, Fn&& fn, bool parallel = true)
    -> std::vector<decltype(fn(long{}))> {
  using R = decltype(fn(long{}));
  std::vector<R> out(static_cast<size_t>(count < 0 ? 0 : count));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[static_cast<size_t>(i)] = fn(i);
  } else {
    for (long i = 0; i < count; ++i) out[static_cast<size_t>(i)] = fn(i);
  }
  return out;
}

}  // namespace gsn
