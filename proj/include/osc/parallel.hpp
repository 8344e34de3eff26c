#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace osc {

// Worker count: OSC_KIT_THREADS if set and positive, else hardware concurrency.
unsigned thread_cap();

// Runs f(i) for i in [0, n) on up to thread_cap() threads. Exceptions are rethrown
// (the one with the lowest index wins) after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// Results are stored by index, so output order does not depend on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace osc
