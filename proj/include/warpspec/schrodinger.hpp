#pragma once

#include <optional>
#include <span>
#include <vector>

#include "warpspec/hamiltonian.hpp"
#include "warpspec/warp.hpp"

namespace warpspec {

enum class HamiltonianKind { additive, multiplicative, combined };

/// H(t) = a(t) H + b(t):
///   additive        H + g(t)         a = 1,  b = g
///   multiplicative  H g(t)           a = g,  b = 0
///   combined        H g1(t) + g2(t)  a = g1, b = g2
/// The separable time factor is exp(-i phase(E, t)) with phase E t + h, E h, E h1 + h2.
class TimeDependence {
 public:
  static TimeDependence additive(Warp w);
  static TimeDependence multiplicative(Warp w);
  static TimeDependence combined(Warp w1, Warp w2);

  HamiltonianKind kind() const { return kind_; }
  double a(double t) const;
  double b(double t) const;
  double phase(double energy, double t) const;
  const Warp& first() const { return w1_; }
  const std::optional<Warp>& second() const { return w2_; }
  /// Throws NonPositiveG when a(t) <= 0 somewhere on [lo, hi] (H(t) unbounded below).
  void require_physical(double lo, double hi) const;

 private:
  TimeDependence(HamiltonianKind k, Warp w1, std::optional<Warp> w2)
      : kind_(k), w1_(std::move(w1)), w2_(std::move(w2)) {}
  HamiltonianKind kind_;
  Warp w1_;
  std::optional<Warp> w2_;
};

/// psi(q, t) sampled slice by slice: values[it * n_q + iq].
struct SpaceTimeField {
  SpaceGrid sgrid;
  TimeGrid tgrid;
  std::vector<cplx> values;

  SpaceTimeField(SpaceGrid s, TimeGrid t);
  std::span<cplx> slice(std::size_t it) { return {values.data() + it * sgrid.size(), sgrid.size()}; }
  std::span<const cplx> slice(std::size_t it) const { return {values.data() + it * sgrid.size(), sgrid.size()}; }
  cplx at(std::size_t iq, std::size_t it) const { return values[it * sgrid.size() + iq]; }
};

/// psi_E(q) (2 pi)^{-1/2} exp(-i phase(E, t)).
SpaceTimeField separable_solution(const EigenPair& ep, const SpaceGrid& sgrid, const TimeDependence& td,
                                  const TimeGrid& tgrid);

/// Superposition sum c_j * separable_solution(ep_j).
SpaceTimeField superpose(std::span<const SpaceTimeField> fields, std::span<const cplx> coeffs);

/// max over interior t of ||i d_t psi - H(t) psi|| / ||psi||, d_t by the fourth-order central stencil.
double schrodinger_residual(const SpaceTimeField& field, const Hamiltonian1D& H, const TimeDependence& td);

struct PropagationResult {
  SpaceTimeField field;
  /// dt * max ||H(t)|| < 0.5 on every step (accuracy heuristic, not a stability limit).
  bool stability_ok = true;
  double max_step_norm_drift = 0.0;
};

/// Crank-Nicolson with the midpoint Hamiltonian H(t + dt/2); `substeps` internal steps per
/// output interval of tgrid.
PropagationResult propagate_crank_nicolson(const Hamiltonian1D& H, const TimeDependence& td,
                                           std::span<const cplx> psi0, const TimeGrid& tgrid,
                                           std::size_t substeps = 1);

/// |<psi_A(., t), psi_B(., t)> dq|.
double cross_orthogonality(const SpaceTimeField& a, const SpaceTimeField& b, std::size_t it);

/// sqrt(sum |a - b|^2 dq) at one time slice.
double slice_l2_distance(const SpaceTimeField& a, const SpaceTimeField& b, std::size_t it);

}  // namespace warpspec
