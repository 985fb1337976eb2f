#include "warpspec/hamiltonian.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

namespace warpspec {

PotentialSpec PotentialSpec::parse(const std::string& kind, std::vector<double> params) {
  PotentialSpec p;
  if (kind == "harmonic") {
    p.kind = PotentialKind::harmonic;
    if (params.empty()) params = {1.0};
  } else if (kind == "box") {
    p.kind = PotentialKind::box;
  } else if (kind == "gaussian-well") {
    p.kind = PotentialKind::gaussian_well;
    if (params.size() < 2) throw Error(ErrorCode::BadPotential, "gaussian-well needs [V0, sigma]");
  } else if (kind == "custom") {
    p.kind = PotentialKind::custom;
  } else {
    throw Error(ErrorCode::BadPotential, "unknown potential '" + kind + "'");
  }
  p.params = std::move(params);
  return p;
}

std::vector<double> Hamiltonian1D::diagonal() const {
  const double kin = 1.0 / (mass * grid.step() * grid.step());
  std::vector<double> d(interior_size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = kin + potential[i + 1];
  return d;
}

double Hamiltonian1D::off_diagonal() const { return -0.5 / (mass * grid.step() * grid.step()); }

std::vector<cplx> Hamiltonian1D::apply(std::span<const cplx> psi) const {
  const std::size_t n = grid.size();
  const double kin = 1.0 / (mass * grid.step() * grid.step());
  const double off = off_diagonal();
  std::vector<cplx> out(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = (kin + potential[i]) * psi[i] + off * (psi[i - 1] + psi[i + 1]);
  return out;
}

double Hamiltonian1D::norm_bound() const {
  const auto d = diagonal();
  double m = 0.0;
  for (double x : d) m = std::max(m, std::abs(x));
  return m + 2.0 * std::abs(off_diagonal());
}

Hamiltonian1D build_hamiltonian(const SpaceGrid& grid, const PotentialSpec& spec, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw Error(ErrorCode::BadPotential, "mass must be positive");
  Hamiltonian1D H{grid, std::vector<double>(grid.size()), mass};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double q = grid[i];
    double v = 0.0;
    switch (spec.kind) {
      case PotentialKind::harmonic: v = 0.5 * spec.params.at(0) * q * q; break;
      case PotentialKind::box: v = 0.0; break;
      case PotentialKind::gaussian_well: {
        const double s = spec.params.at(1);
        v = -spec.params.at(0) * std::exp(-q * q / (2.0 * s * s));
        break;
      }
      case PotentialKind::custom:
        if (spec.samples.size() != grid.size())
          throw Error(ErrorCode::BadPotential, "custom potential needs one sample per grid node");
        v = spec.samples[i];
        break;
    }
    v += spec.shift;
    if (!std::isfinite(v)) throw Error(ErrorCode::BadPotential, "non-finite potential at q = " + std::to_string(q));
    H.potential[i] = v;
  }
  return H;
}

std::vector<EigenPair> eigensolve(const Hamiltonian1D& H, std::size_t k) {
  const lapack_int m = static_cast<lapack_int>(H.interior_size());
  if (k == 0) return {};
  if (k > static_cast<std::size_t>(m))
    throw Error(ErrorCode::ConvergenceFailure, "requested " + std::to_string(k) + " eigenpairs from " +
                                                   std::to_string(m) + " unknowns");
  auto d = H.diagonal();
  std::vector<double> e(static_cast<std::size_t>(m), H.off_diagonal());
  std::vector<double> w(static_cast<std::size_t>(m));
  std::vector<double> z(static_cast<std::size_t>(m) * k);
  std::vector<lapack_int> isuppz(2 * k);
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', m, d.data(), e.data(), 0.0, 0.0, 1,
                                         static_cast<lapack_int>(k), 0.0, &found, w.data(), z.data(), m,
                                         isuppz.data());
  if (info != 0 || found != static_cast<lapack_int>(k))
    throw Error(ErrorCode::ConvergenceFailure, "tridiagonal eigensolver failed (info " + std::to_string(info) + ")");

  const double scale = 1.0 / std::sqrt(H.grid.step());
  std::vector<EigenPair> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    out[j].energy = w[j];
    auto& psi = out[j].psi;
    psi.assign(H.grid.size(), 0.0);
    const double* col = z.data() + j * static_cast<std::size_t>(m);
    double peak = 0.0;
    for (lapack_int i = 0; i < m; ++i) peak = std::max(peak, std::abs(col[i]));
    double sign = 1.0;
    for (lapack_int i = 0; i < m; ++i)
      if (std::abs(col[i]) > 1e-3 * peak) {
        sign = col[i] > 0 ? 1.0 : -1.0;
        break;
      }
    for (lapack_int i = 0; i < m; ++i) psi[static_cast<std::size_t>(i) + 1] = sign * scale * col[i];
  }
  return out;
}

}  // namespace warpspec
