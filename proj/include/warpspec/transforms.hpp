#pragma once

#include <optional>

#include "warpspec/kernels.hpp"
#include "warpspec/signal.hpp"
#include "warpspec/warp.hpp"

namespace warpspec {

// ---- additive case: F_h f(E) = (2 pi)^{-1/2} int f(t) e^{-i h(t)} e^{-i E t} dt ----

/// Pre-multiplies by e^{-i h(t)} and applies the uniform Fourier transform.
/// Throws GridMismatch when the energy grid exceeds the Nyquist limit of f's grid.
SpectrumSamples modulated_forward(const SampledSignal& f, const Warp& w, const EnergyGrid& egrid);
SpectrumSamples modulated_forward(const SampledSignal& f, const Warp& w);  // conjugate grid

/// (2 pi)^{-1/2} sum_k F_k e^{i h(t)} e^{i E_k t} dE on tgrid.
SampledSignal modulated_inverse(const SpectrumSamples& F, const Warp& w, const TimeGrid& tgrid);

/// Max-norm gap between modulated_forward (FFT route) and a direct oscillatory sum of the
/// definition on the same conjugate grid.
double modulated_reduction_check(const SampledSignal& f, const Warp& w);

// ---- multiplicative case: F_h f(E) = (2 pi)^{-1/2} int f(t) e^{-i E h(t)} dt ----

enum class WarpedMethod { direct_quadrature, resample_fft };

/// Uniform grid in u = h(t) used by the resample route. Defaults to [h(t_min), h(t_max)]
/// with as many samples as the time grid.
TimeGrid warped_u_grid(const Warp& w, const TimeGrid& tgrid, std::size_t n_u = 0);

/// Energy grid conjugate to the default u-grid (E_max = pi / du).
EnergyGrid warped_energy_grid(const Warp& w, const TimeGrid& tgrid, std::size_t n_u = 0);

struct WarpedOptions {
  WarpedMethod method = WarpedMethod::resample_fft;
  std::optional<TimeGrid> u_grid;  // resample route only
  kernels::Exec exec = kernels::Exec::parallel;
};

SpectrumSamples warped_forward(const SampledSignal& f, const Warp& w, const EnergyGrid& egrid,
                               const WarpedOptions& opts = {});

/// (2 pi)^{-1/2} h'(t) sum_k F_k e^{i E_k h(t)} dE on tgrid.
SampledSignal warped_inverse(const SpectrumSamples& F, const Warp& w, const TimeGrid& tgrid,
                             kernels::Exec exec = kernels::Exec::parallel);

/// Largest |E| the direct t-sum resolves for this signal: pi / (dt * max g) with the max taken
/// over samples where |f| exceeds rel_floor * max|f|.
double warped_direct_trust_limit(const SampledSignal& f, const Warp& w, double rel_floor = 1e-9);

/// Max-norm gap between the direct-quadrature and resample-fft routes on the energy grid
/// conjugate to the u-grid (n_u samples, default as many as f), restricted to the part of it
/// the direct t-sum resolves (see warped_direct_trust_limit).
double warped_reduction_check(const SampledSignal& f, const Warp& w, std::size_t n_u = 0);

// ---- bi-orthogonality and resolution of unity ----

/// (2 pi)^{-1} int h'(t) e^{-i h(t) (E - E_probe)} dt over tgrid (composite Simpson).
cplx biorth_pairing(double e_probe, double e, const Warp& w, const TimeGrid& tgrid);

/// Exact value of the same integral after substituting y = h(t).
cplx biorth_pairing_exact(double e_probe, double e, const Warp& w, const TimeGrid& tgrid);

/// int biorth_pairing(E', E) phi(E') dE' by Simpson over egrid: a smeared delta at E.
cplx smeared_biorth(double e, const Warp& w, const TimeGrid& tgrid, const EnergyGrid& eprime,
                    const std::function<double(double)>& phi);

/// Time grid [h^{-1}(center - width/2), h^{-1}(center + width/2)] realizing an h-window of the given width.
TimeGrid h_window_grid(const Warp& w, double width, std::size_t n, double center = 0.0);

enum class ResolutionFlavor { additive, multiplicative };

/// Relative L2 error of inverse(forward(f)): additive uses the modulated pair, multiplicative
/// uses warped_forward (resample-fft) followed by warped_inverse.
/// n_u sets the u-grid of the multiplicative flavor (default: as many samples as f).
double resolution_roundtrip(const SampledSignal& f, const Warp& w, ResolutionFlavor flavor, std::size_t n_u = 0);

}  // namespace warpspec
