#include "warpspec/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "warpspec/fourier.hpp"
#include "warpspec/numerics.hpp"

namespace warpspec {
namespace {

void check_nyquist(const EnergyGrid& egrid, double dt, const char* what) {
  const double emax = std::max(std::abs(egrid.min()), std::abs(egrid.max()));
  if (emax > nyquist(dt) * (1.0 + 1e-12))
    throw Error(ErrorCode::GridMismatch, std::string(what) + ": energy grid exceeds the Nyquist limit of the sampling");
}

std::vector<cplx> premultiply(const SampledSignal& f, const Warp& w, int sign) {
  std::vector<cplx> p(f.values.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = f.values[j] * std::polar(1.0, sign * w.h(f.grid[j]));
  return p;
}

}  // namespace

SpectrumSamples modulated_forward(const SampledSignal& f, const Warp& w, const EnergyGrid& egrid) {
  check_nyquist(egrid, f.grid.step(), "modulated_forward");
  const auto p = premultiply(f, w, -1);
  return {egrid, fourier::forward(std::span<const cplx>(p), f.grid, egrid)};
}

SpectrumSamples modulated_forward(const SampledSignal& f, const Warp& w) {
  return modulated_forward(f, w, conjugate_energy_grid(f.grid));
}

SampledSignal modulated_inverse(const SpectrumSamples& F, const Warp& w, const TimeGrid& tgrid) {
  check_nyquist(F.grid, tgrid.step(), "modulated_inverse");
  auto v = fourier::inverse(std::span<const cplx>(F.values), F.grid, tgrid);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= std::polar(1.0, w.h(tgrid[j]));
  return {tgrid, std::move(v)};
}

double modulated_reduction_check(const SampledSignal& f, const Warp& w) {
  const EnergyGrid egrid = conjugate_energy_grid(f.grid);
  const auto viaFft = modulated_forward(f, w, egrid);
  // Definition summed term by term: f(t) e^{-i h(t)} e^{-i E t} dt.
  std::vector<cplx> direct(egrid.size());
  const auto t = f.grid.points();
  std::vector<cplx> c(t.size());
  for (std::size_t j = 0; j < t.size(); ++j)
    c[j] = f.values[j] * std::polar(f.grid.step() * kInvSqrt2Pi, -w.h(t[j]));
  kernels::sum_to_uniform(c, t, egrid.min(), egrid.step(), -1, direct);
  return max_abs_diff(viaFft.values, direct);
}

TimeGrid warped_u_grid(const Warp& w, const TimeGrid& tgrid, std::size_t n_u) {
  w.require_monotone_on(tgrid.min(), tgrid.max());
  return TimeGrid(w.h(tgrid.min()), w.h(tgrid.max()), n_u == 0 ? tgrid.size() : n_u);
}

EnergyGrid warped_energy_grid(const Warp& w, const TimeGrid& tgrid, std::size_t n_u) {
  return conjugate_energy_grid(warped_u_grid(w, tgrid, n_u));
}

SpectrumSamples warped_forward(const SampledSignal& f, const Warp& w, const EnergyGrid& egrid,
                               const WarpedOptions& opts) {
  const TimeGrid& tg = f.grid;
  w.require_monotone_on(tg.min(), tg.max());

  if (opts.method == WarpedMethod::direct_quadrature) {
    const auto h = w.sample_h(tg);
    std::vector<double> weights(tg.size(), tg.step());
    return {egrid, fourier::forward_direct(f.values, h, weights, egrid, opts.exec)};
  }

  const TimeGrid ug = opts.u_grid ? *opts.u_grid : warped_u_grid(w, tg);
  const double ulo = w.h(tg.min());
  const double uhi = w.h(tg.max());
  const double slack = 1e-12 * (1.0 + std::abs(ulo) + std::abs(uhi));
  if (ug.min() < ulo - slack || ug.max() > uhi + slack)
    throw Error(ErrorCode::ResampleOutOfRange, "u-grid extends beyond h over the signal's time grid");
  check_nyquist(egrid, ug.step(), "warped_forward");

  // (dh^{-1}/du) f(h^{-1}(u)) on the uniform u-grid.
  const numerics::ComplexSpline spline(tg.min(), tg.step(), f.values);
  std::vector<cplx> resampled(ug.size());
  for (std::size_t l = 0; l < ug.size(); ++l) {
    const double u = std::clamp(ug[l], ulo, uhi);
    const double t = std::clamp(w.h_inv(u), tg.min(), tg.max());
    resampled[l] = spline(t) / w.g(t);
  }
  return {egrid, fourier::forward(std::span<const cplx>(resampled), ug, egrid, opts.exec)};
}

SampledSignal warped_inverse(const SpectrumSamples& F, const Warp& w, const TimeGrid& tgrid, kernels::Exec exec) {
  w.require_monotone_on(tgrid.min(), tgrid.max());
  const auto h = w.sample_h(tgrid);
  auto v = fourier::inverse_direct(F.values, F.grid, h, exec);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= w.g(tgrid[j]);
  return {tgrid, std::move(v)};
}

double warped_direct_trust_limit(const SampledSignal& f, const Warp& w, double rel_floor) {
  double peak = 0.0;
  for (auto z : f.values) peak = std::max(peak, std::abs(z));
  double gmax = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j)
    if (std::abs(f.values[j]) > rel_floor * peak) gmax = std::max(gmax, w.g(f.grid[j]));
  return gmax > 0.0 ? nyquist(f.grid.step()) / gmax : nyquist(f.grid.step());
}

double warped_reduction_check(const SampledSignal& f, const Warp& w, std::size_t n_u) {
  const TimeGrid ug = warped_u_grid(w, f.grid, n_u);
  const EnergyGrid full = conjugate_energy_grid(ug);
  WarpedOptions resample{WarpedMethod::resample_fft, ug};
  const auto b = warped_forward(f, w, full, resample);

  // The direct t-sum only resolves E g(t) dt < pi; compare on that part of the conjugate grid.
  const double limit = std::min(warped_direct_trust_limit(f, w), std::max(-full.min(), full.max()));
  std::size_t k0 = 0, k1 = full.size();
  while (k0 < k1 && full[k0] < -limit) ++k0;
  while (k1 > k0 && full[k1 - 1] > limit) --k1;
  if (k1 - k0 < 2) return 0.0;
  const EnergyGrid window = EnergyGrid::from_step(full[k0], full.step(), k1 - k0);
  WarpedOptions direct{WarpedMethod::direct_quadrature, std::nullopt};
  const auto a = warped_forward(f, w, window, direct);
  return max_abs_diff(a.values, std::span<const cplx>(b.values).subspan(k0, k1 - k0));
}

cplx biorth_pairing(double e_probe, double e, const Warp& w, const TimeGrid& tgrid) {
  w.require_monotone_on(tgrid.min(), tgrid.max());
  const auto weights = numerics::simpson_weights(tgrid.size(), tgrid.step());
  const double de = e - e_probe;
  cplx acc = 0.0;
  for (std::size_t j = 0; j < tgrid.size(); ++j) {
    const double t = tgrid[j];
    acc += weights[j] * w.g(t) * std::polar(1.0, -w.h(t) * de);
  }
  return acc / (2.0 * kPi);
}

cplx biorth_pairing_exact(double e_probe, double e, const Warp& w, const TimeGrid& tgrid) {
  const double y0 = w.h(tgrid.min());
  const double y1 = w.h(tgrid.max());
  const double de = e - e_probe;
  if (de == 0.0) return (y1 - y0) / (2.0 * kPi);
  // (1/2pi) [e^{-i y de} / (-i de)]_{y0}^{y1}
  const cplx num = std::polar(1.0, -y1 * de) - std::polar(1.0, -y0 * de);
  return num / (cplx(0.0, -de) * 2.0 * kPi);
}

cplx smeared_biorth(double e, const Warp& w, const TimeGrid& tgrid, const EnergyGrid& eprime,
                    const std::function<double(double)>& phi) {
  const auto weights = numerics::simpson_weights(eprime.size(), eprime.step());
  cplx acc = 0.0;
  for (std::size_t k = 0; k < eprime.size(); ++k) {
    const double ep = eprime[k];
    acc += weights[k] * phi(ep) * biorth_pairing(ep, e, w, tgrid);
  }
  return acc;
}

TimeGrid h_window_grid(const Warp& w, double width, std::size_t n, double center) {
  const Interval r = w.range();
  const double lo = center - 0.5 * width;
  const double hi = center + 0.5 * width;
  if (!(r.lo < lo && hi < r.hi))
    throw Error(ErrorCode::OutOfDomain, "h-window exceeds the range of the " + w.family() + " warp");
  return TimeGrid(w.h_inv(lo), w.h_inv(hi), n);
}

double resolution_roundtrip(const SampledSignal& f, const Warp& w, ResolutionFlavor flavor, std::size_t n_u) {
  if (flavor == ResolutionFlavor::additive) {
    const auto F = modulated_forward(f, w);
    const auto back = modulated_inverse(F, w, f.grid);
    return relative_l2_error(back.values, f.values);
  }
  const TimeGrid ug = warped_u_grid(w, f.grid, n_u);
  const auto F = warped_forward(f, w, conjugate_energy_grid(ug), {WarpedMethod::resample_fft, ug});
  const auto back = warped_inverse(F, w, f.grid);
  return relative_l2_error(back.values, f.values);
}

}  // namespace warpspec
