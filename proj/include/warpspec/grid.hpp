#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "warpspec/error.hpp"

namespace warpspec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

// Uniform grid lo, lo + step, ..., hi with n samples (both ends included).
template <class Tag>
class UniformGrid {
 public:
  UniformGrid() = default;

  UniformGrid(double lo, double hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
    if (!(n >= Tag::min_points) || !(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
      throw Error(ErrorCode::InvalidGrid, std::string(Tag::name) + " grid needs min < max and n >= " +
                                              std::to_string(Tag::min_points));
    step_ = (hi - lo) / static_cast<double>(n - 1);
  }

  static UniformGrid from_step(double lo, double step, std::size_t n) {
    UniformGrid g(lo, lo + step * static_cast<double>(n - 1), n);
    g.step_ = step;
    return g;
  }

  double min() const { return lo_; }
  double max() const { return hi_; }
  double step() const { return step_; }
  std::size_t size() const { return n_; }
  double operator[](std::size_t i) const { return lo_ + step_ * static_cast<double>(i); }
  double span() const { return hi_ - lo_; }

  std::vector<double> points() const {
    std::vector<double> p(n_);
    for (std::size_t i = 0; i < n_; ++i) p[i] = (*this)[i];
    return p;
  }

  bool same_as(const UniformGrid& o, double rel = 1e-12) const {
    const double scale = std::abs(step_) * static_cast<double>(n_);
    return n_ == o.n_ && std::abs(lo_ - o.lo_) <= rel * scale && std::abs(step_ - o.step_) <= rel * std::abs(step_);
  }

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::size_t n_ = 2;
  double step_ = 1.0;
};

struct TimeTag {
  static constexpr std::size_t min_points = 2;
  static constexpr const char* name = "time";
};
struct EnergyTag {
  static constexpr std::size_t min_points = 2;
  static constexpr const char* name = "energy";
};
struct SpaceTag {
  static constexpr std::size_t min_points = 3;
  static constexpr const char* name = "space";
};

using TimeGrid = UniformGrid<TimeTag>;
using EnergyGrid = UniformGrid<EnergyTag>;
using SpaceGrid = UniformGrid<SpaceTag>;

/// Energy grid reciprocal to a sample grid of n points: E_k = (k - n/2) dE, dE = 2 pi / (n dt).
/// This is the grid on which the uniform DFT is exactly invertible.
template <class Tag>
EnergyGrid conjugate_energy_grid(const UniformGrid<Tag>& x) {
  const std::size_t n = x.size();
  const double de = 2.0 * kPi / (static_cast<double>(n) * x.step());
  return EnergyGrid::from_step(-static_cast<double>(n / 2) * de, de, n);
}

template <class Tag>
bool is_conjugate(const EnergyGrid& e, const UniformGrid<Tag>& x) {
  return e.same_as(conjugate_energy_grid(x));
}

/// Largest |E| that a sample spacing dt can represent.
inline double nyquist(double dt) { return kPi / dt; }

}  // namespace warpspec
