#include "warpspec/kernels.hpp"

#include <fftw3.h>
#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <cmath>
#include <mutex>
#include <vector>

namespace warpspec::kernels {
namespace {

// Phasor recurrences are re-seeded from an exact sincos every kBlock steps,
// which bounds the accumulated rounding at ~kBlock ulps.
constexpr std::size_t kBlock = 64;

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

int thread_count() {
  if (const char* env = std::getenv("WARPSPEC_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

void sum_to_uniform(std::span<const cplx> in, std::span<const double> x, double e0, double de, int sign,
                    std::span<cplx> out, Exec exec) {
  const std::size_t n_in = std::min(in.size(), x.size());
  const std::size_t n_out = out.size();
  const double s = sign >= 0 ? 1.0 : -1.0;

  if (exec == Exec::reference) {
    for (std::size_t k = 0; k < n_out; ++k) {
      const double e = e0 + de * static_cast<double>(k);
      cplx acc = 0.0;
      for (std::size_t j = 0; j < n_in; ++j) acc += in[j] * std::polar(1.0, s * e * x[j]);
      out[k] = acc;
    }
    return;
  }

  // Per input: step phasor e^{i s de x_j}; per output block: phasors re-seeded exactly, then
  // advanced across the block. The inner loop runs over inputs and vectorizes.
  std::vector<double> sr(n_in), si(n_in);
  for (std::size_t j = 0; j < n_in; ++j) {
    sr[j] = std::cos(s * de * x[j]);
    si[j] = std::sin(s * de * x[j]);
  }
  const auto n_blocks = static_cast<std::ptrdiff_t>((n_out + kBlock - 1) / kBlock);
#pragma omp parallel num_threads(thread_count())
  {
    std::vector<double> pr(n_in), pi(n_in);
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < n_blocks; ++b) {
      const std::size_t k0 = static_cast<std::size_t>(b) * kBlock;
      const std::size_t k1 = std::min(n_out, k0 + kBlock);
      const double e_start = e0 + de * static_cast<double>(k0);
      for (std::size_t j = 0; j < n_in; ++j) {
        const double c = std::cos(s * e_start * x[j]);
        const double sn = std::sin(s * e_start * x[j]);
        pr[j] = in[j].real() * c - in[j].imag() * sn;
        pi[j] = in[j].real() * sn + in[j].imag() * c;
      }
      for (std::size_t k = k0; k < k1; ++k) {
        double ar = 0.0, ai = 0.0;
#pragma omp simd reduction(+ : ar, ai)
        for (std::size_t j = 0; j < n_in; ++j) {
          ar += pr[j];
          ai += pi[j];
          const double r = pr[j] * sr[j] - pi[j] * si[j];
          pi[j] = pr[j] * si[j] + pi[j] * sr[j];
          pr[j] = r;
        }
        out[k] = {ar, ai};
      }
    }
  }
}

void sum_from_uniform(std::span<const cplx> in, double e0, double de, std::span<const double> x, int sign,
                      std::span<cplx> out, Exec exec) {
  const std::size_t n_in = in.size();
  const std::size_t n_out = std::min(out.size(), x.size());
  const double s = sign >= 0 ? 1.0 : -1.0;

  if (exec == Exec::reference) {
    for (std::size_t j = 0; j < n_out; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n_in; ++k) acc += in[k] * std::polar(1.0, s * (e0 + de * static_cast<double>(k)) * x[j]);
      out[j] = acc;
    }
    return;
  }

  // Outputs are processed in chunks; within a chunk the inner loop runs over outputs and
  // vectorizes, while every output still accumulates its inputs in ascending order.
  constexpr std::size_t kChunk = 256;
  const auto n_chunks = static_cast<std::ptrdiff_t>((n_out + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (std::ptrdiff_t c = 0; c < n_chunks; ++c) {
    const std::size_t j0 = static_cast<std::size_t>(c) * kChunk;
    const std::size_t m = std::min(n_out, j0 + kChunk) - j0;
    double sr[kChunk], si[kChunk], pr[kChunk], pi[kChunk], ar[kChunk] = {}, ai[kChunk] = {};
    for (std::size_t j = 0; j < m; ++j) {
      sr[j] = std::cos(s * de * x[j0 + j]);
      si[j] = std::sin(s * de * x[j0 + j]);
    }
    for (std::size_t k0 = 0; k0 < n_in; k0 += kBlock) {
      const double e_start = e0 + de * static_cast<double>(k0);
      for (std::size_t j = 0; j < m; ++j) {
        pr[j] = std::cos(s * e_start * x[j0 + j]);
        pi[j] = std::sin(s * e_start * x[j0 + j]);
      }
      const std::size_t k1 = std::min(n_in, k0 + kBlock);
      for (std::size_t k = k0; k < k1; ++k) {
        const double vr = in[k].real(), vi = in[k].imag();
#pragma omp simd
        for (std::size_t j = 0; j < m; ++j) {
          ar[j] += vr * pr[j] - vi * pi[j];
          ai[j] += vr * pi[j] + vi * pr[j];
          const double r = pr[j] * sr[j] - pi[j] * si[j];
          pi[j] = pr[j] * si[j] + pi[j] * sr[j];
          pr[j] = r;
        }
      }
    }
    for (std::size_t j = 0; j < m; ++j) out[j0 + j] = {ar[j], ai[j]};
  }
}

void fft(std::span<cplx> data, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign >= 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace warpspec::kernels
