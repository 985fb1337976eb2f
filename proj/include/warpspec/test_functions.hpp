#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "warpspec/signal.hpp"

namespace warpspec {

enum class TestFunctionKind { gaussian, hermite, bump };

/// Rapidly decaying test function phi(E).
///   gaussian [sigma = 1, center = 0]: exp(-(E - c)^2 / (2 sigma^2)), so the unit Gaussian has phi(0) = 1
///   hermite  [n, scale = 1]:          normalized Hermite function psi_n(E / scale)
///   bump     [center = 0, radius = 1]: exp(-1 / (1 - x^2)), x = (E - c) / r, compactly supported
class TestFunction {
 public:
  TestFunction(TestFunctionKind kind, std::vector<double> params);
  static TestFunction parse(const std::string& kind, std::vector<double> params);

  double operator()(double e) const;
  bool analytic_fourier_available() const { return kind_ != TestFunctionKind::bump; }
  /// [F phi](u) = (2 pi)^{-1/2} int phi(E) e^{-i E u} dE, closed form (gaussian, hermite only).
  cplx fourier(double u) const;

  /// Interval outside which |phi| < tol * max|phi|.
  Interval support(double tol = 1e-16) const;
  /// Smallest U with |F phi(u)| < tol * max|F phi| for |u| > U.
  double fourier_extent(double tol = 1e-16) const;

  TestFunctionKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  std::string describe() const;

 private:
  TestFunctionKind kind_;
  std::vector<double> params_;
};

/// Normalized Hermite function psi_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).
double hermite_function(int n, double x);

/// Deterministic splitmix/mt-based generator: uniform in [0,1) and standard normal.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();
  double normal();

 private:
  std::uint64_t state_;
};

/// Corpus signal on a time grid.
///   gaussian [sigma, center]; hermite [n, scale]; noise [bandwidth, envelope sigma, modes]
SampledSignal make_signal(const std::string& kind, const std::vector<double>& params, const TimeGrid& grid,
                          std::uint64_t seed = 0);

struct CorpusEntry {
  std::string name;
  SampledSignal signal;
};

/// Ten-signal corpus: three Gaussians, Hermite functions 0..3, three seeded band-limited noises.
std::vector<CorpusEntry> signal_corpus(const TimeGrid& grid, std::uint64_t seed);

}  // namespace warpspec
