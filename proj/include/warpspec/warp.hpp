#pragma once

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "warpspec/grid.hpp"

namespace warpspec {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x >= lo && x <= hi; }
  bool contains(const Interval& o) const { return o.lo >= lo && o.hi <= hi; }
  bool bounded_below() const { return std::isfinite(lo); }
  bool bounded_above() const { return std::isfinite(hi); }
};

namespace detail {

// Time flow with h_base(t) = integral of g; the Warp wrapper applies the (t0, c0) normalization.
class WarpModel {
 public:
  virtual ~WarpModel() = default;
  virtual double g(double t) const = 0;
  virtual double h(double t) const = 0;
  virtual double h_inv(double u) const = 0;
  virtual Interval domain() const = 0;
};

}  // namespace detail

/// A time warp h(t) = c0 + integral_{t0}^{t} g(s) ds with its rate g = h' and inverse h^{-1}.
/// Immutable and cheap to copy; evaluation is thread-safe.
class Warp {
 public:
  Warp(std::shared_ptr<const detail::WarpModel> model, std::string family, std::vector<double> params,
       bool monotone, double t0 = 0.0, double c0 = 0.0);

  double g(double t) const { return model_->g(t); }
  double h(double t) const { return model_->h(t) + shift_; }
  /// Throws NonMonotoneWarp for warps built without the g > 0 guarantee.
  double h_inv(double u) const;
  double dhinv_du(double u) const { return 1.0 / g(h_inv(u)); }

  /// Interval on which g > 0 (or the sampled support for numeric warps).
  Interval domain() const { return model_->domain(); }
  /// h(domain), computed from the limits of h at the domain ends.
  Interval range() const { return range_; }
  bool monotone() const { return monotone_; }

  const std::string& family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  double t0() const { return t0_; }
  double c0() const { return c0_; }

  std::vector<double> sample_g(const TimeGrid& grid) const;
  std::vector<double> sample_h(const TimeGrid& grid) const;

  /// Throws NonMonotoneWarp unless the warp is monotone and [lo, hi] lies in its domain.
  void require_monotone_on(double lo, double hi) const;

 private:
  std::shared_ptr<const detail::WarpModel> model_;
  std::string family_;
  std::vector<double> params_;
  bool monotone_;
  double t0_;
  double c0_;
  double shift_;
  Interval range_;
};

struct WarpOptions {
  double t0 = 0.0;
  double c0 = 0.0;
  /// When false, parameters outside the monotone region are accepted and the warp is
  /// flagged non-monotone (h_inv unavailable). Used for monotonicity diagnostics.
  bool validate = true;
};

/// Catalog: identity, linear-scale [alpha], chirp [alpha, beta], sin-perturbed [a, omega],
/// exp-rate [kappa]. "zero" (g = 0, h = c0) is accepted as the neutral phase for the additive
/// case and is always non-monotone.
Warp make_analytic_warp(std::string_view name, std::span<const double> params, const WarpOptions& opts = {});

/// h from cumulative Simpson quadrature of strictly positive g samples, h(t0) = c0.
/// `tolerance` bounds the Richardson self-estimate of the quadrature error.
Warp make_numeric_warp(const TimeGrid& grid, std::span<const double> g_samples, double t0 = 0.0, double c0 = 0.0,
                       double tolerance = 1e-8);

struct MonotonicityReport {
  double min_g = 0.0;
  double argmin_t = 0.0;
  bool pass = false;
};

MonotonicityReport check_monotone(const Warp& w, const TimeGrid& grid);

}  // namespace warpspec
