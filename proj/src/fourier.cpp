#include "warpspec/fourier.hpp"

namespace warpspec::fourier {
namespace {

// exp(i * sign * 2 pi * m * j / n) with the product reduced modulo n in integers.
cplx unit_root(std::size_t m, std::size_t j, std::size_t n, int sign) {
  const auto r = static_cast<double>((m * j) % n);
  return std::polar(1.0, sign * 2.0 * kPi * r / static_cast<double>(n));
}

}  // namespace

template <class Tag>
std::vector<cplx> forward(std::span<const cplx> v, const UniformGrid<Tag>& x, const EnergyGrid& e,
                          kernels::Exec exec) {
  const std::size_t n = x.size();
  if (v.size() != n) throw Error(ErrorCode::GridMismatch, "forward transform input length mismatch");
  std::vector<cplx> out(e.size());
  if (is_conjugate(e, x)) {
    // E_k x_j = E_k x_0 + 2 pi (k - m) j / n, m = n / 2.
    const std::size_t m = n / 2;
    for (std::size_t j = 0; j < n; ++j) out[j] = v[j] * unit_root(m, j, n, +1);
    kernels::fft(out, -1);
    const double scale = x.step() * kInvSqrt2Pi;
    for (std::size_t k = 0; k < n; ++k) out[k] *= scale * std::polar(1.0, -e[k] * x.min());
    return out;
  }
  const auto nodes = x.points();
  std::vector<double> w(n, x.step());
  return forward_direct(v, nodes, w, e, exec);
}

template <class Tag>
std::vector<cplx> inverse(std::span<const cplx> F, const EnergyGrid& e, const UniformGrid<Tag>& x,
                          kernels::Exec exec) {
  if (F.size() != e.size()) throw Error(ErrorCode::GridMismatch, "inverse transform input length mismatch");
  const std::size_t n = x.size();
  if (is_conjugate(e, x)) {
    const std::size_t m = n / 2;
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = F[k] * std::polar(1.0, e[k] * x.min());
    kernels::fft(out, +1);
    const double scale = e.step() * kInvSqrt2Pi;
    for (std::size_t j = 0; j < n; ++j) out[j] *= scale * unit_root(m, j, n, -1);
    return out;
  }
  return inverse_direct(F, e, x.points(), exec);
}

std::vector<cplx> forward_direct(std::span<const cplx> v, std::span<const double> nodes,
                                 std::span<const double> weights, const EnergyGrid& e, kernels::Exec exec) {
  std::vector<cplx> weighted(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) weighted[j] = v[j] * weights[j] * kInvSqrt2Pi;
  std::vector<cplx> out(e.size());
  kernels::sum_to_uniform(weighted, nodes, e.min(), e.step(), -1, out, exec);
  return out;
}

std::vector<cplx> inverse_direct(std::span<const cplx> F, const EnergyGrid& e, std::span<const double> nodes,
                                 kernels::Exec exec) {
  std::vector<cplx> scaled(F.size());
  for (std::size_t k = 0; k < F.size(); ++k) scaled[k] = F[k] * (e.step() * kInvSqrt2Pi);
  std::vector<cplx> out(nodes.size());
  kernels::sum_from_uniform(scaled, e.min(), e.step(), nodes, +1, out, exec);
  return out;
}

template std::vector<cplx> forward(std::span<const cplx>, const TimeGrid&, const EnergyGrid&, kernels::Exec);
template std::vector<cplx> inverse(std::span<const cplx>, const EnergyGrid&, const TimeGrid&, kernels::Exec);

}  // namespace warpspec::fourier
