#include <chrono>
#include <cstdio>
#include <string>

#include "keycrystal/affine_a.hpp"
#include "keycrystal/parallel.hpp"

using namespace kc;

namespace {

template <class F>
double seconds(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class T, class F>
void sweep(const std::string& name, const std::vector<T>& in, F fn) {
  decltype(serial_map(in, fn)) a, b;
  double ts = seconds([&] { a = serial_map(in, fn); });
  double tp = seconds([&] { b = parallel_map(in, fn); });
  std::printf("%-28s items=%-6zu serial=%.3fs parallel=%.3fs threads=%d %s\n", name.c_str(), in.size(), ts, tp,
              thread_count(), a == b ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::stoi(argv[1]) : 18;
  auto ps = affine::partitions(n);
  for (int e : {2, 3, 5})
    sweep("e-core sweep e=" + std::to_string(e), ps, [e](const affine::Partition& p) { return affine::is_e_core(p, e); });

  const affine::Charge s{0, 1};
  auto mps = affine::multipartitions_up_to(2, n / 2);
  sweep("(e,s)-core sweep e=3", mps, [&](const affine::Multipartition& p) { return affine::is_es_core(p, 3, s); });

  std::vector<affine::Symbol> regular;
  for (int k = 0; k <= n / 2; ++k)
    for (const auto& p : affine::partitions(k))
      if (affine::is_e_regular(affine::transpose(p), 3)) regular.push_back(affine::Symbol::of(p, 0));
  sweep("level-1 key sweep e=3", regular, [](const affine::Symbol& x) { return affine::level1_key_right(x, 3); });
  return 0;
}
