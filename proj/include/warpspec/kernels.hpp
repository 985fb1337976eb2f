#pragma once

#include <span>

#include "warpspec/grid.hpp"

// Oscillatory sums between arbitrary real nodes x_j and a uniform grid E_k = e0 + k de.
// Every output is accumulated by one thread in a fixed order, so results do not depend on
// the thread count.
namespace warpspec::kernels {

enum class Exec {
  reference,  // literal per-term sincos, serial
  parallel,   // blocked phasor recurrence, OpenMP over outputs
};

/// out[k] = sum_j in[j] * exp(i * sign * E_k * x[j])
void sum_to_uniform(std::span<const cplx> in, std::span<const double> x, double e0, double de, int sign,
                    std::span<cplx> out, Exec exec = Exec::parallel);

/// out[j] = sum_k in[k] * exp(i * sign * E_k * x[j])
void sum_from_uniform(std::span<const cplx> in, double e0, double de, std::span<const double> x, int sign,
                      std::span<cplx> out, Exec exec = Exec::parallel);

/// In-place unnormalized DFT: out[k] = sum_j in[j] exp(sign * 2 pi i j k / n).
void fft(std::span<cplx> data, int sign);

/// Threads the parallel kernels may use (honours WARPSPEC_THREADS, then OMP settings).
int thread_count();

}  // namespace warpspec::kernels
