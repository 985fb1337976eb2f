#include "warpspec/distributions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "warpspec/fourier.hpp"
#include "warpspec/kernels.hpp"
#include "warpspec/numerics.hpp"

namespace warpspec {
namespace {

constexpr double kSupportTol = 1e-16;
constexpr std::size_t kMaxAutoPoints = 1 << 15;

struct UWindow {
  double lo, hi;
  bool lo_physical, hi_physical;  // set by the warp's range or the truncation, not by the cut
};

UWindow u_window(const Warp& w, double half_width, std::optional<double> T, bool require_cover) {
  if (!w.monotone()) throw Error(ErrorCode::NonMonotoneWarp, w.family() + " warp is not monotone");
  Interval r = w.range();
  if (T) {
    const Interval tw = truncation_window(w, *T);
    r = {w.h(tw.lo), w.h(tw.hi)};
  }
  if (require_cover && !T && (r.lo > -half_width || r.hi < half_width))
    throw Error(ErrorCode::RangeTooNarrow, "range of the " + w.family() + " warp does not cover |u| <= " +
                                               std::to_string(half_width) + " needed by the test function");
  UWindow win{std::max(r.lo, -half_width), std::min(r.hi, half_width), r.lo >= -half_width, r.hi <= half_width};
  if (!(win.lo < win.hi)) throw Error(ErrorCode::RangeTooNarrow, "empty u-window");
  return win;
}

std::vector<double> jacobian_samples(const Warp& w, const TimeGrid& ug) {
  std::vector<double> J(ug.size());
  for (std::size_t l = 0; l < ug.size(); ++l) J[l] = w.dhinv_du(ug[l]);
  return J;
}

}  // namespace

Interval truncation_window(const Warp& w, double T) {
  if (!w.monotone()) throw Error(ErrorCode::NonMonotoneWarp, w.family() + " warp is not monotone");
  const Interval d = w.domain();
  const Interval win{std::max(-T, d.lo), std::min(T, d.hi)};
  if (!(win.lo < win.hi)) throw Error(ErrorCode::NonMonotoneWarp, "truncation window misses the monotone domain");
  return win;
}

std::size_t s_pairing_direct_min_points(const Warp& w, const TestFunction& phi, double T) {
  const Interval tw = truncation_window(w, T);
  const Interval es = phi.support(kSupportTol);
  const double emax = std::max(std::abs(es.lo), std::abs(es.hi));
  // h and g are monotone / smooth; probe densely for their extremes.
  double hmax = 0.0, gmax = 0.0;
  const TimeGrid probe(tw.lo, tw.hi, 4097);
  for (std::size_t j = 0; j < probe.size(); ++j) {
    hmax = std::max(hmax, std::abs(w.h(probe[j])));
    gmax = std::max(gmax, w.g(probe[j]));
  }
  const double n_e = (es.hi - es.lo) * hmax / kPi;
  const double n_t = (tw.hi - tw.lo) * gmax * emax / kPi;
  return static_cast<std::size_t>(std::ceil(std::max(n_e, n_t))) + 2;
}

cplx s_pairing_direct(const Warp& w, const TestFunction& phi, double T, std::size_t n) {
  const Interval tw = truncation_window(w, T);
  const Interval es = phi.support(kSupportTol);
  const std::size_t needed = s_pairing_direct_min_points(w, phi, T);
  if (n == 0) {
    n = std::max<std::size_t>({2 * needed, static_cast<std::size_t>((tw.hi - tw.lo) / 0.05), 257});
    n |= 1;
    if (n > kMaxAutoPoints)
      throw Error(ErrorCode::NyquistViolation, "direct S pairing at T = " + std::to_string(T) + " would need " +
                                                   std::to_string(n) + " points per axis");
  } else if (n < needed) {
    throw Error(ErrorCode::NyquistViolation, "direct S pairing needs at least " + std::to_string(needed) +
                                                 " points per axis, got " + std::to_string(n));
  }

  const TimeGrid tg(tw.lo, tw.hi, n);
  const EnergyGrid eg(es.lo, es.hi, n);

  // Energy integral first: (2 pi)^{-1/2} int phi(E) e^{-i E h(t)} dE = [F phi](h(t)).
  std::vector<cplx> phi_w(n);
  for (std::size_t k = 0; k < n; ++k) phi_w[k] = phi(eg[k]) * eg.step() * kInvSqrt2Pi;
  const auto h = w.sample_h(tg);
  std::vector<cplx> fphi(n);
  kernels::sum_from_uniform(phi_w, eg.min(), eg.step(), h, -1, fphi);

  const auto wt = numerics::gregory_weights(n, tg.step());
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += wt[j] * fphi[j];
  return acc * kInvSqrt2Pi;
}

ConvergedPairing s_pairing_direct_converged(const Warp& w, const TestFunction& phi, double T0, double tol,
                                            int max_doublings) {
  ConvergedPairing r;
  double T = T0;
  r.value = s_pairing_direct(w, phi, T);
  r.T_history.push_back(T);
  r.values.push_back(r.value);
  for (int k = 0; k < max_doublings; ++k) {
    T *= 2.0;
    const cplx next = s_pairing_direct(w, phi, T);
    r.T_history.push_back(T);
    r.values.push_back(next);
    const double change = std::abs(next - r.value);
    r.value = next;
    r.T_used = T;
    if (change < tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

cplx s_pairing_parseval(const Warp& w, const TestFunction& phi, const ParsevalOptions& opts) {
  const double band = phi.fourier_extent(kSupportTol);
  const UWindow win = u_window(w, band, opts.T, true);
  const std::size_t n_j = std::max<std::size_t>(opts.n_u, 16);
  const TimeGrid ug(win.lo, win.hi, n_j);

  // K(u) = (dh^{-1}/du)^* with quadrature weights folded in; zero-padded so that the
  // conjugate energy grid resolves phi.
  const auto J = jacobian_samples(w, ug);
  const auto wt = numerics::gregory_weights(n_j, ug.step());
  const std::size_t n_fft = std::bit_ceil(4 * n_j);
  const TimeGrid padded = TimeGrid::from_step(ug.min(), ug.step(), n_fft);
  std::vector<cplx> K(n_fft, 0.0);
  for (std::size_t l = 0; l < n_j; ++l) K[l] = std::conj(cplx(J[l])) * (wt[l] / ug.step());

  // F^{-1} K = conj(F conj(K)).
  const EnergyGrid eg = conjugate_energy_grid(padded);
  std::vector<cplx> conjK(n_fft);
  std::transform(K.begin(), K.end(), conjK.begin(), [](cplx z) { return std::conj(z); });
  auto invK = fourier::forward(std::span<const cplx>(conjK), padded, eg);
  for (auto& z : invK) z = std::conj(z);

  cplx acc = 0.0;
  const Interval es = phi.support(kSupportTol);
  for (std::size_t k = 0; k < eg.size(); ++k) {
    const double e = eg[k];
    if (e < es.lo || e > es.hi) continue;
    acc += phi(e) * std::conj(invK[k]);
  }
  return acc * eg.step() * kInvSqrt2Pi;
}

SpectrumSamples s_density(const Warp& w, const EnergyGrid& egrid, const DensityOptions& opts) {
  const UWindow win = u_window(w, opts.u_half_width, opts.T, false);
  const TimeGrid ug(win.lo, win.hi, std::max<std::size_t>(opts.n_u, 16));
  auto J = jacobian_samples(w, ug);

  auto taper = numerics::tukey_window(ug.size(), opts.taper_fraction);
  const std::size_t half = ug.size() / 2;
  for (std::size_t l = 0; l < ug.size(); ++l)
    if ((l < half && win.lo_physical) || (l >= half && win.hi_physical)) taper[l] = 1.0;

  const auto wt = numerics::gregory_weights(ug.size(), ug.step());
  std::vector<cplx> conjK(ug.size());
  for (std::size_t l = 0; l < ug.size(); ++l) conjK[l] = std::conj(std::conj(cplx(J[l] * taper[l])));
  const auto nodes = ug.points();
  // conj(F^{-1} K)(E) = (2 pi)^{-1/2} sum conj(K) e^{-i E u} du, i.e. a forward transform of conj(K).
  auto S = fourier::forward_direct(conjK, nodes, wt, egrid);
  for (auto& z : S) z *= kInvSqrt2Pi;
  return {egrid, std::move(S)};
}

cplx pair_density(const SpectrumSamples& s, const TestFunction& phi) {
  return pair_density(s, [&phi](double e) { return phi(e); });
}

cplx pair_density(const SpectrumSamples& s, const std::function<double(double)>& phi) {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    const double wk = (k == 0 || k + 1 == s.grid.size()) ? 0.5 : 1.0;
    acc += wk * phi(s.grid[k]) * s.values[k];
  }
  return acc * s.grid.step();
}

}  // namespace warpspec
