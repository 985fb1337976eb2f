#pragma once

#include <span>
#include <vector>

#include "warpspec/grid.hpp"
#include "warpspec/kernels.hpp"

// Uniform Fourier transform with symmetric normalization, discretized as Riemann sums:
//   forward  F(E_k) = (2 pi)^{-1/2} sum_j v_j exp(-i E_k x_j) dx
//   inverse  v(x_j) = (2 pi)^{-1/2} sum_k F_k exp(+i E_k x_j) dE
// On the conjugate energy grid the pair is exactly inverse and runs through the FFT;
// any other energy grid uses the direct kernels.
namespace warpspec::fourier {

template <class Tag>
std::vector<cplx> forward(std::span<const cplx> v, const UniformGrid<Tag>& x, const EnergyGrid& e,
                          kernels::Exec exec = kernels::Exec::parallel);

template <class Tag>
std::vector<cplx> inverse(std::span<const cplx> F, const EnergyGrid& e, const UniformGrid<Tag>& x,
                          kernels::Exec exec = kernels::Exec::parallel);

/// Direct-sum forward transform at arbitrary real nodes with quadrature weights w_j (no FFT).
std::vector<cplx> forward_direct(std::span<const cplx> v, std::span<const double> nodes,
                                 std::span<const double> weights, const EnergyGrid& e,
                                 kernels::Exec exec = kernels::Exec::parallel);

/// Direct-sum inverse transform evaluated at arbitrary real nodes.
std::vector<cplx> inverse_direct(std::span<const cplx> F, const EnergyGrid& e, std::span<const double> nodes,
                                 kernels::Exec exec = kernels::Exec::parallel);

}  // namespace warpspec::fourier
