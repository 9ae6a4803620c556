#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace kc {

// Thread count for sweep kernels: KEYCRYSTAL_THREADS if set, else the OpenMP default.
int thread_count();
bool parallel_enabled();

template <class T, class F>
auto serial_map(const std::vector<T>& in, F fn) {
  using R = std::decay_t<decltype(fn(in.front()))>;
  std::vector<R> out;
  out.reserve(in.size());
  for (const auto& x : in) out.push_back(fn(x));
  return out;
}

// fn must be a pure function of its argument.
template <class T, class F>
auto parallel_map(const std::vector<T>& in, F fn) {
  using R = std::decay_t<decltype(fn(in.front()))>;
  std::vector<R> out(in.size());
  std::exception_ptr err;
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (long k = 0; k < n; ++k) {
    try {
      out[k] = fn(in[k]);
    } catch (...) {
#pragma omp critical(kc_parallel_map_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace kc
