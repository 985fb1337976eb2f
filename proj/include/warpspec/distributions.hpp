#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "warpspec/signal.hpp"
#include "warpspec/test_functions.hpp"
#include "warpspec/warp.hpp"

namespace warpspec {

// S(E) = (2 pi)^{-1} int e^{i E h(t)} dt exists only as a distribution; everything here
// evaluates it through pairings <S, phi>.

/// Time interval [-T, T] clipped to the warp's monotone domain.
Interval truncation_window(const Warp& w, double T);

/// Smallest per-axis sample count meeting the Nyquist conditions of the direct route
/// (dE * max|h| < pi on the energy axis, dt * max g * max|E| < pi on the time axis).
std::size_t s_pairing_direct_min_points(const Warp& w, const TestFunction& phi, double T);

/// (2 pi)^{-1} int_{-T}^{T} dt int phi(E) e^{-i E h(t)} dE on an n x n grid, E first.
/// n == 0 picks a count with a 2x margin over the Nyquist minimum (at most 32768). Throws
/// NyquistViolation when an explicit n is too small or the automatic count exceeds the cap.
cplx s_pairing_direct(const Warp& w, const TestFunction& phi, double T, std::size_t n = 0);

struct ConvergedPairing {
  cplx value;
  double T_used = 0.0;
  bool converged = false;
  std::vector<double> T_history;
  std::vector<cplx> values;
};

/// Doubles T from T0 until successive pairings change by less than tol.
ConvergedPairing s_pairing_direct_converged(const Warp& w, const TestFunction& phi, double T0 = 5.0,
                                            double tol = 1e-5, int max_doublings = 6);

struct ParsevalOptions {
  /// Restrict to t in [-T, T]; required when h's range does not cover phi's Fourier band.
  std::optional<double> T;
  std::size_t n_u = 16384;
};

/// <S, phi> = (2 pi)^{-1/2} int phi(E) { [F^{-1} ((dh^{-1}/du)^*)](E) }^* dE, with dh^{-1}/du = 1 / g(h^{-1}(u))
/// sampled on a uniform u-grid and transformed by FFT. Throws RangeTooNarrow when the range
/// of h (or of h over [-T, T]) misses part of the band of F phi and no truncation was requested.
cplx s_pairing_parseval(const Warp& w, const TestFunction& phi, const ParsevalOptions& opts = {});

struct DensityOptions {
  double u_half_width = 40.0;
  std::size_t n_u = 65536;
  double taper_fraction = 0.1;
  std::optional<double> T;
};

/// Regularized samples of S(E): dh^{-1}/du restricted to |u| <= u_half_width and tapered at
/// the cut edges (edges set by the range of h or by T are left sharp).
SpectrumSamples s_density(const Warp& w, const EnergyGrid& egrid, const DensityOptions& opts = {});

/// Trapezoid pairing of sampled S with phi over the sample grid.
cplx pair_density(const SpectrumSamples& s, const TestFunction& phi);
cplx pair_density(const SpectrumSamples& s, const std::function<double(double)>& phi);

}  // namespace warpspec
