#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "warpspec/grid.hpp"

namespace warpspec::numerics {

/// Composite Simpson weights (times step) for n >= 3 uniform samples; an even n
/// closes with Simpson's 3/8 rule on the last three intervals. n == 2 falls back to trapezoid.
std::vector<double> simpson_weights(std::size_t n, double step);

/// Trapezoid rule with fourth-order Gregory end corrections. Needs n >= 8.
std::vector<double> gregory_weights(std::size_t n, double step);

/// H_j = integral of y from x_0 to x_j, fourth order (Simpson on even offsets).
std::vector<double> cumulative_simpson(std::span<const double> y, double step);

/// Natural cubic spline through uniformly spaced samples.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(double x0, double step, std::vector<double> y);

  double operator()(double x) const;
  double x_min() const { return x0_; }
  double x_max() const { return x0_ + step_ * static_cast<double>(y_.size() - 1); }

 private:
  double x0_ = 0.0;
  double step_ = 1.0;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives
};

class ComplexSpline {
 public:
  ComplexSpline() = default;
  ComplexSpline(double x0, double step, std::span<const cplx> y);
  cplx operator()(double x) const { return {re_(x), im_(x)}; }

 private:
  CubicSpline re_;
  CubicSpline im_;
};

/// d/dx with the fourth-order five-point stencil: central on the interior,
/// one-sided on the two samples at each end. Needs n >= 5.
std::vector<cplx> derivative4(std::span<const cplx> f, double step);

/// Tukey (tapered cosine) window; `fraction` of the samples lie in the two cosine flanks.
std::vector<double> tukey_window(std::size_t n, double fraction);

/// Solve f(x) = target for increasing f on [lo, hi]: bisection to a narrow bracket,
/// then safeguarded Newton polish to |dx| < tol.
double invert_monotone(const std::function<double(double)>& f, const std::function<double(double)>& fprime,
                       double target, double lo, double hi, double tol = 1e-13);

/// Least-squares slope of log(err) against log(param).
double loglog_slope(std::span<const double> param, std::span<const double> err);

}  // namespace warpspec::numerics
