#pragma once

#include <functional>
#include <span>
#include <vector>

#include "warpspec/grid.hpp"
#include "warpspec/warp.hpp"

namespace warpspec {

struct SampledSignal {
  TimeGrid grid;
  std::vector<cplx> values;

  SampledSignal() = default;
  SampledSignal(TimeGrid g, std::vector<cplx> v);
  static SampledSignal zeros(const TimeGrid& g) { return {g, std::vector<cplx>(g.size())}; }
  static SampledSignal sample(const TimeGrid& g, const std::function<cplx(double)>& f);
};

struct SpectrumSamples {
  EnergyGrid grid;
  std::vector<cplx> values;

  SpectrumSamples() = default;
  SpectrumSamples(EnergyGrid g, std::vector<cplx> v);
};

enum class BasisFlavor { additive, multiplicative, multiplicative_perp };

/// <t|E,h> for the three families:
///   additive            (2 pi)^{-1/2} exp(-i (E t + h(t)))
///   multiplicative      (2 pi)^{-1/2} exp(-i E h(t))
///   multiplicative_perp (2 pi)^{-1/2} h'(t) exp(-i E h(t))
struct BasisFunction {
  Warp warp;
  double energy;
  BasisFlavor flavor;

  cplx operator()(double t) const;
  SampledSignal sample(const TimeGrid& grid) const;
};

/// Riemann-sum inner product <a, b> = sum conj(a_j) b_j step.
cplx inner(std::span<const cplx> a, std::span<const cplx> b, double step);
double l2_norm(std::span<const cplx> a, double step);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double relative_l2_error(std::span<const cplx> approx, std::span<const cplx> exact);

}  // namespace warpspec
