#pragma once

#include "warpspec/signal.hpp"
#include "warpspec/warp.hpp"

namespace warpspec {

enum class EnergyOperator {
  additive,        // i d/dt - g(t), self-adjoint
  multiplicative,  // (1 / h'(t)) i d/dt, not self-adjoint unless h' is constant
};

/// i f' - g f, with the fourth-order derivative stencil.
SampledSignal apply_additive_energy_op(const SampledSignal& f, const Warp& w);

/// (1 / h') i f'. Requires h' > 0 on the grid.
SampledSignal apply_multiplicative_energy_op(const SampledSignal& f, const Warp& w);

SampledSignal apply_energy_op(EnergyOperator op, const SampledSignal& f, const Warp& w);

/// Interior sample range [2, n-3] on which the central stencil is used.
struct InteriorRange {
  std::size_t begin;
  std::size_t end;  // exclusive
};
InteriorRange interior(const TimeGrid& grid);

/// |<A f, k> - <f, A k>| with the Riemann inner product over the interior samples.
double adjoint_defect(EnergyOperator op, const Warp& w, const SampledSignal& f, const SampledSignal& k);

/// max over interior t of |A u_E - E u_E| for the operator's own basis function u_E.
double eigen_residual(EnergyOperator op, const Warp& w, double energy, const TimeGrid& grid);

/// Multiplies the signal by a Tukey window with the given flank fraction.
SampledSignal taper(const SampledSignal& f, double fraction = 0.1);

}  // namespace warpspec
