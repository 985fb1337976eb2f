#pragma once

#include <span>
#include <string>
#include <vector>

#include "warpspec/grid.hpp"

namespace warpspec {

enum class PotentialKind { harmonic, box, gaussian_well, custom };

/// harmonic [k]: k q^2 / 2; box []: V = 0 with the grid ends as walls;
/// gaussian-well [V0, sigma]: -V0 exp(-q^2 / (2 sigma^2)); custom: one sample per grid node.
/// `shift` is added everywhere.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::harmonic;
  std::vector<double> params;
  std::vector<double> samples;
  double shift = 0.0;

  static PotentialSpec parse(const std::string& kind, std::vector<double> params);
};

/// -(1/2m) d^2/dq^2 + V(q) with the 3-point stencil and Dirichlet walls at both grid ends.
/// Unknowns live on the n - 2 interior nodes; full-length vectors carry zeros at the walls.
struct Hamiltonian1D {
  SpaceGrid grid;
  std::vector<double> potential;
  double mass = 1.0;

  std::size_t interior_size() const { return grid.size() - 2; }
  /// Diagonal over interior nodes.
  std::vector<double> diagonal() const;
  double off_diagonal() const;
  /// H psi for a full-length vector (boundary entries of the result are zero).
  std::vector<cplx> apply(std::span<const cplx> psi) const;
  /// Gershgorin bound on the spectral radius.
  double norm_bound() const;
};

Hamiltonian1D build_hamiltonian(const SpaceGrid& grid, const PotentialSpec& potential, double mass = 1.0);

struct EigenPair {
  double energy = 0.0;
  /// Full-length, real, sum psi^2 dq = 1, sign fixed so the first significant sample is positive.
  std::vector<double> psi;
};

/// k lowest eigenpairs in ascending order.
std::vector<EigenPair> eigensolve(const Hamiltonian1D& H, std::size_t k);

}  // namespace warpspec
