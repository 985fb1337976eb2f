// Wall-clock comparison of the serial reference kernels against the parallel ones.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "warpspec/kernels.hpp"
#include "warpspec/test_functions.hpp"

using namespace warpspec;

namespace {

template <class F>
double seconds(F&& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4096;
  Rng rng(1);
  std::vector<cplx> in(n);
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    in[j] = {rng.normal(), rng.normal()};
    x[j] = 40.0 * rng.uniform() - 20.0;
  }
  std::vector<cplx> out(n);
  const double e0 = -80.0, de = 160.0 / n;

  std::printf("n = %zu, threads = %d\n", n, kernels::thread_count());
  std::printf("%-18s %12s %12s %9s %10s\n", "kernel", "reference_s", "parallel_s", "speedup", "ns/term");
  auto row = [&](const char* name, auto&& call) {
    const double ref = seconds([&] { call(kernels::Exec::reference); }, 1);
    const double par = seconds([&] { call(kernels::Exec::parallel); }, 5);
    std::printf("%-18s %12.4f %12.4f %9.1f %10.3f\n", name, ref, par, ref / par, 1e9 * par / (double(n) * n));
  };
  row("sum_to_uniform", [&](kernels::Exec e) { kernels::sum_to_uniform(in, x, e0, de, -1, out, e); });
  row("sum_from_uniform", [&](kernels::Exec e) { kernels::sum_from_uniform(in, e0, de, x, 1, out, e); });

  std::vector<cplx> data(in);
  const double fft = seconds([&] { kernels::fft(data, -1); }, 50);
  std::printf("%-18s %12s %12.6f\n", "fft", "-", fft);
  return 0;
}
