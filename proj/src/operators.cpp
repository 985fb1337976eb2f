#include "warpspec/operators.hpp"

#include <cmath>

#include "warpspec/numerics.hpp"

namespace warpspec {

SampledSignal apply_additive_energy_op(const SampledSignal& f, const Warp& w) {
  auto d = numerics::derivative4(f.values, f.grid.step());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = cplx(0.0, 1.0) * d[j] - w.g(f.grid[j]) * f.values[j];
  return {f.grid, std::move(d)};
}

SampledSignal apply_multiplicative_energy_op(const SampledSignal& f, const Warp& w) {
  w.require_monotone_on(f.grid.min(), f.grid.max());
  auto d = numerics::derivative4(f.values, f.grid.step());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = cplx(0.0, 1.0) * d[j] / w.g(f.grid[j]);
  return {f.grid, std::move(d)};
}

SampledSignal apply_energy_op(EnergyOperator op, const SampledSignal& f, const Warp& w) {
  return op == EnergyOperator::additive ? apply_additive_energy_op(f, w) : apply_multiplicative_energy_op(f, w);
}

InteriorRange interior(const TimeGrid& grid) {
  if (grid.size() < 5) throw Error(ErrorCode::GridTooCoarse, "need at least 5 samples for interior checks");
  return {2, grid.size() - 2};
}

double adjoint_defect(EnergyOperator op, const Warp& w, const SampledSignal& f, const SampledSignal& k) {
  if (!f.grid.same_as(k.grid)) throw Error(ErrorCode::GridMismatch, "adjoint_defect needs signals on one grid");
  const auto af = apply_energy_op(op, f, w);
  const auto ak = apply_energy_op(op, k, w);
  const auto [b, e] = interior(f.grid);
  cplx lhs = 0.0, rhs = 0.0;
  for (std::size_t j = b; j < e; ++j) {
    lhs += std::conj(af.values[j]) * k.values[j];
    rhs += std::conj(f.values[j]) * ak.values[j];
  }
  return std::abs(lhs - rhs) * f.grid.step();
}

double eigen_residual(EnergyOperator op, const Warp& w, double energy, const TimeGrid& grid) {
  const BasisFunction u{w, energy, op == EnergyOperator::additive ? BasisFlavor::additive : BasisFlavor::multiplicative};
  const auto f = u.sample(grid);
  const auto af = apply_energy_op(op, f, w);
  const auto [b, e] = interior(grid);
  double m = 0.0;
  for (std::size_t j = b; j < e; ++j) m = std::max(m, std::abs(af.values[j] - energy * f.values[j]));
  return m;
}

SampledSignal taper(const SampledSignal& f, double fraction) {
  const auto win = numerics::tukey_window(f.grid.size(), fraction);
  std::vector<cplx> v(f.values);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= win[j];
  return {f.grid, std::move(v)};
}

}  // namespace warpspec
