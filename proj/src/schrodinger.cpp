#include "warpspec/schrodinger.hpp"

#include <algorithm>
#include <cmath>

namespace warpspec {

TimeDependence TimeDependence::additive(Warp w) { return {HamiltonianKind::additive, std::move(w), std::nullopt}; }
TimeDependence TimeDependence::multiplicative(Warp w) {
  return {HamiltonianKind::multiplicative, std::move(w), std::nullopt};
}
TimeDependence TimeDependence::combined(Warp w1, Warp w2) {
  return {HamiltonianKind::combined, std::move(w1), std::move(w2)};
}

double TimeDependence::a(double t) const { return kind_ == HamiltonianKind::additive ? 1.0 : w1_.g(t); }

double TimeDependence::b(double t) const {
  switch (kind_) {
    case HamiltonianKind::additive: return w1_.g(t);
    case HamiltonianKind::multiplicative: return 0.0;
    case HamiltonianKind::combined: return w2_->g(t);
  }
  return 0.0;
}

double TimeDependence::phase(double energy, double t) const {
  switch (kind_) {
    case HamiltonianKind::additive: return energy * t + w1_.h(t);
    case HamiltonianKind::multiplicative: return energy * w1_.h(t);
    case HamiltonianKind::combined: return energy * w1_.h(t) + w2_->h(t);
  }
  return 0.0;
}

void TimeDependence::require_physical(double lo, double hi) const {
  if (kind_ == HamiltonianKind::additive) return;
  const TimeGrid probe(lo, hi, 1025);
  for (std::size_t i = 0; i < probe.size(); ++i)
    if (!(a(probe[i]) > 0.0))
      throw Error(ErrorCode::NonPositiveG, "g(t) <= 0 at t = " + std::to_string(probe[i]) +
                                               ": H g(t) is not bounded below");
}

SpaceTimeField::SpaceTimeField(SpaceGrid s, TimeGrid t)
    : sgrid(std::move(s)), tgrid(std::move(t)), values(sgrid.size() * tgrid.size()) {}

SpaceTimeField separable_solution(const EigenPair& ep, const SpaceGrid& sgrid, const TimeDependence& td,
                                  const TimeGrid& tgrid) {
  if (ep.psi.size() != sgrid.size()) throw Error(ErrorCode::GridMismatch, "eigenvector does not match space grid");
  SpaceTimeField f(sgrid, tgrid);
  for (std::size_t it = 0; it < tgrid.size(); ++it) {
    const cplx factor = kInvSqrt2Pi * std::polar(1.0, -td.phase(ep.energy, tgrid[it]));
    auto s = f.slice(it);
    for (std::size_t iq = 0; iq < sgrid.size(); ++iq) s[iq] = ep.psi[iq] * factor;
  }
  return f;
}

SpaceTimeField superpose(std::span<const SpaceTimeField> fields, std::span<const cplx> coeffs) {
  if (fields.empty() || fields.size() != coeffs.size())
    throw Error(ErrorCode::GridMismatch, "superposition needs one coefficient per field");
  SpaceTimeField out(fields[0].sgrid, fields[0].tgrid);
  for (std::size_t j = 0; j < fields.size(); ++j) {
    if (fields[j].values.size() != out.values.size())
      throw Error(ErrorCode::GridMismatch, "superposed fields differ in shape");
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += coeffs[j] * fields[j].values[i];
  }
  return out;
}

double schrodinger_residual(const SpaceTimeField& field, const Hamiltonian1D& H, const TimeDependence& td) {
  const std::size_t nt = field.tgrid.size();
  const std::size_t nq = field.sgrid.size();
  if (nt < 5) throw Error(ErrorCode::GridTooCoarse, "residual needs at least 5 time samples");
  if (!field.sgrid.same_as(H.grid)) throw Error(ErrorCode::GridMismatch, "field and Hamiltonian grids differ");
  const double dt = field.tgrid.step();
  double worst = 0.0;
  for (std::size_t it = 2; it + 2 < nt; ++it) {
    const double t = field.tgrid[it];
    const auto psi = field.slice(it);
    const auto Hpsi = H.apply(psi);
    const double a = td.a(t), b = td.b(t);
    double num = 0.0, den = 0.0;
    for (std::size_t iq = 0; iq < nq; ++iq) {
      const cplx dpsi = (field.at(iq, it - 2) - 8.0 * field.at(iq, it - 1) + 8.0 * field.at(iq, it + 1) -
                         field.at(iq, it + 2)) /
                        (12.0 * dt);
      const cplx r = cplx(0.0, 1.0) * dpsi - (a * Hpsi[iq] + b * psi[iq]);
      num += std::norm(r);
      den += std::norm(psi[iq]);
    }
    if (den > 0.0) worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

namespace {

// Solve (diag + off * (shift left + shift right)) x = rhs on the interior, complex Thomas.
bool thomas(std::span<const cplx> diag, cplx off, std::span<cplx> rhs, std::vector<cplx>& scratch) {
  const std::size_t m = diag.size();
  scratch.resize(m);
  cplx beta = diag[0];
  if (std::abs(beta) == 0.0) return false;
  rhs[0] /= beta;
  for (std::size_t i = 1; i < m; ++i) {
    scratch[i] = off / beta;
    beta = diag[i] - off * scratch[i];
    if (std::abs(beta) == 0.0 || !std::isfinite(beta.real()) || !std::isfinite(beta.imag())) return false;
    rhs[i] = (rhs[i] - off * rhs[i - 1]) / beta;
  }
  for (std::size_t i = m - 1; i-- > 0;) rhs[i] -= scratch[i + 1] * rhs[i + 1];
  return true;
}

}  // namespace

PropagationResult propagate_crank_nicolson(const Hamiltonian1D& H, const TimeDependence& td,
                                           std::span<const cplx> psi0, const TimeGrid& tgrid,
                                           std::size_t substeps) {
  const std::size_t nq = H.grid.size();
  if (psi0.size() != nq) throw Error(ErrorCode::GridMismatch, "initial state does not match space grid");
  double norm0 = 0.0;
  for (auto z : psi0) norm0 += std::norm(z);
  if (!(norm0 > 0.0)) throw Error(ErrorCode::LinearSolveFailure, "initial state has zero norm");
  substeps = std::max<std::size_t>(substeps, 1);
  td.require_physical(tgrid.min(), tgrid.max());

  PropagationResult res{SpaceTimeField(H.grid, tgrid)};
  std::copy(psi0.begin(), psi0.end(), res.field.slice(0).begin());

  const std::size_t m = nq - 2;
  const auto d0 = H.diagonal();
  const double off0 = H.off_diagonal();
  const double hnorm = H.norm_bound();
  const double dt = tgrid.step() / static_cast<double>(substeps);
  const cplx half_i(0.0, 0.5 * dt);

  std::vector<cplx> psi(psi0.begin() + 1, psi0.end() - 1);
  std::vector<cplx> rhs(m), diag(m), scratch;
  double prev_norm = std::sqrt(norm0);
  for (std::size_t it = 1; it < tgrid.size(); ++it) {
    for (std::size_t s = 0; s < substeps; ++s) {
      const double tm = tgrid[it - 1] + (static_cast<double>(s) + 0.5) * dt;
      const double a = td.a(tm), b = td.b(tm);
      if (dt * (std::abs(a) * hnorm + std::abs(b)) >= 0.5) res.stability_ok = false;
      const cplx off = half_i * (a * off0);
      // rhs = (I - i dt/2 H_m) psi, system matrix I + i dt/2 H_m.
      for (std::size_t i = 0; i < m; ++i) {
        const cplx hd = a * d0[i] + b;
        cplx r = psi[i] - half_i * hd * psi[i];
        if (i > 0) r -= off * psi[i - 1];
        if (i + 1 < m) r -= off * psi[i + 1];
        rhs[i] = r;
        diag[i] = 1.0 + half_i * hd;
      }
      if (!thomas(diag, off, rhs, scratch))
        throw Error(ErrorCode::LinearSolveFailure, "Crank-Nicolson tridiagonal solve broke down");
      psi.swap(rhs);
      double nrm = 0.0;
      for (auto z : psi) nrm += std::norm(z);
      nrm = std::sqrt(nrm);
      res.max_step_norm_drift = std::max(res.max_step_norm_drift, std::abs(nrm - prev_norm) / prev_norm);
      prev_norm = nrm;
    }
    auto out = res.field.slice(it);
    out[0] = out[nq - 1] = 0.0;
    std::copy(psi.begin(), psi.end(), out.begin() + 1);
  }
  return res;
}

double cross_orthogonality(const SpaceTimeField& a, const SpaceTimeField& b, std::size_t it) {
  if (!a.sgrid.same_as(b.sgrid)) throw Error(ErrorCode::GridMismatch, "fields live on different space grids");
  if (it >= a.tgrid.size() || it >= b.tgrid.size()) throw Error(ErrorCode::GridMismatch, "time index out of range");
  const auto sa = a.slice(it), sb = b.slice(it);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) acc += std::conj(sa[i]) * sb[i];
  return std::abs(acc * a.sgrid.step());
}

double slice_l2_distance(const SpaceTimeField& a, const SpaceTimeField& b, std::size_t it) {
  if (!a.sgrid.same_as(b.sgrid)) throw Error(ErrorCode::GridMismatch, "fields live on different space grids");
  const auto sa = a.slice(it), sb = b.slice(it);
  double acc = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) acc += std::norm(sa[i] - sb[i]);
  return std::sqrt(acc * a.sgrid.step());
}

}  // namespace warpspec
