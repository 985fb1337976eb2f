#include "warpspec/signal.hpp"

#include <cmath>

namespace warpspec {

SampledSignal::SampledSignal(TimeGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "signal length does not match its grid");
  for (const auto& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::GridMismatch, "signal has non-finite samples");
}

SampledSignal SampledSignal::sample(const TimeGrid& g, const std::function<cplx(double)>& f) {
  std::vector<cplx> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g[i]);
  return {g, std::move(v)};
}

SpectrumSamples::SpectrumSamples(EnergyGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "spectrum length does not match its grid");
}

cplx BasisFunction::operator()(double t) const {
  switch (flavor) {
    case BasisFlavor::additive:
      return kInvSqrt2Pi * std::polar(1.0, -(energy * t + warp.h(t)));
    case BasisFlavor::multiplicative:
      return kInvSqrt2Pi * std::polar(1.0, -energy * warp.h(t));
    case BasisFlavor::multiplicative_perp:
      return kInvSqrt2Pi * warp.g(t) * std::polar(1.0, -energy * warp.h(t));
  }
  return 0.0;
}

SampledSignal BasisFunction::sample(const TimeGrid& grid) const {
  return SampledSignal::sample(grid, [this](double t) { return (*this)(t); });
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b, double step) {
  cplx acc = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc * step;
}

double l2_norm(std::span<const cplx> a, double step) {
  double acc = 0.0;
  for (const auto& z : a) acc += std::norm(z);
  return std::sqrt(acc * step);
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double relative_l2_error(std::span<const cplx> approx, std::span<const cplx> exact) {
  double num = 0.0, den = 0.0;
  const std::size_t n = std::min(approx.size(), exact.size());
  for (std::size_t i = 0; i < n; ++i) {
    num += std::norm(approx[i] - exact[i]);
    den += std::norm(exact[i]);
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

}  // namespace warpspec
