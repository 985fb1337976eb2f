#include "warpspec/warp.hpp"

#include <algorithm>
#include <cmath>

#include "warpspec/numerics.hpp"

namespace warpspec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Linear final : public detail::WarpModel {
 public:
  explicit Linear(double alpha) : alpha_(alpha) {}
  double g(double) const override { return alpha_; }
  double h(double t) const override { return alpha_ * t; }
  double h_inv(double u) const override { return u / alpha_; }
  Interval domain() const override { return alpha_ > 0.0 ? Interval{} : Interval{kInf, -kInf}; }

 private:
  double alpha_;
};

class Chirp final : public detail::WarpModel {
 public:
  Chirp(double alpha, double beta) : alpha_(alpha), beta_(beta) {}
  double g(double t) const override { return alpha_ + 2.0 * beta_ * t; }
  double h(double t) const override { return t * (alpha_ + beta_ * t); }
  double h_inv(double u) const override {
    // Root of beta t^2 + alpha t - u on the increasing branch, in cancellation-free form.
    const double disc = alpha_ * alpha_ + 4.0 * beta_ * u;
    if (disc < 0.0) throw Error(ErrorCode::OutOfDomain, "chirp inverse outside the range of h");
    const double s = std::sqrt(disc);
    if (alpha_ + s != 0.0) return 2.0 * u / (alpha_ + s);
    return (s - alpha_) / (2.0 * beta_);
  }
  Interval domain() const override {
    if (beta_ == 0.0) return alpha_ > 0.0 ? Interval{} : Interval{kInf, -kInf};
    const double edge = -alpha_ / (2.0 * beta_);
    return beta_ > 0.0 ? Interval{edge, kInf} : Interval{-kInf, edge};
  }

 private:
  double alpha_, beta_;
};

class SinPerturbed final : public detail::WarpModel {
 public:
  SinPerturbed(double a, double omega) : a_(a), omega_(omega) {}
  double g(double t) const override { return 1.0 + a_ * omega_ * std::cos(omega_ * t); }
  double h(double t) const override { return t + a_ * std::sin(omega_ * t); }
  double h_inv(double u) const override {
    // |a sin| <= |a| brackets the root.
    const double r = std::abs(a_);
    return numerics::invert_monotone([this](double t) { return h(t); }, [this](double t) { return g(t); }, u, u - r,
                                     u + r);
  }
  Interval domain() const override { return std::abs(a_ * omega_) < 1.0 ? Interval{} : Interval{kInf, -kInf}; }

 private:
  double a_, omega_;
};

class ExpRate final : public detail::WarpModel {
 public:
  explicit ExpRate(double kappa) : kappa_(kappa) {}
  double g(double t) const override { return std::exp(kappa_ * t); }
  double h(double t) const override { return std::expm1(kappa_ * t) / kappa_; }
  double h_inv(double u) const override {
    const double x = kappa_ * u;
    if (x <= -1.0) throw Error(ErrorCode::OutOfDomain, "exp-rate inverse outside the range of h");
    return std::log1p(x) / kappa_;
  }
  Interval domain() const override { return {}; }

 private:
  double kappa_;
};

// h from quadrature of sampled g; cubic Hermite between nodes using (H_j, g_j).
class Numeric final : public detail::WarpModel {
 public:
  Numeric(const TimeGrid& grid, std::vector<double> g, std::vector<double> H)
      : grid_(grid), g_(g), H_(std::move(H)), spline_(grid.min(), grid.step(), std::move(g)) {}

  double g(double t) const override {
    check(t);
    return spline_(t);
  }
  double h(double t) const override {
    check(t);
    const auto [k, s] = locate(t);
    return hermite(k, s);
  }
  double h_inv(double u) const override {
    if (u < H_.front() || u > H_.back()) throw Error(ErrorCode::OutOfDomain, "numeric warp inverse outside range");
    auto it = std::upper_bound(H_.begin(), H_.end(), u);
    std::size_t k = (it == H_.begin()) ? 0 : static_cast<std::size_t>(it - H_.begin()) - 1;
    k = std::min(k, H_.size() - 2);
    const double lo = grid_[k];
    const double hi = grid_[k + 1];
    auto f = [this, k](double t) { return hermite(k, (t - grid_[k]) / grid_.step()); };
    auto fp = [this, k](double t) { return hermite_slope(k, (t - grid_[k]) / grid_.step()); };
    return numerics::invert_monotone(f, fp, u, lo, hi, 1e-14);
  }
  Interval domain() const override { return {grid_.min(), grid_.max()}; }

 private:
  void check(double t) const {
    const double eps = 1e-12 * grid_.span();
    if (t < grid_.min() - eps || t > grid_.max() + eps)
      throw Error(ErrorCode::OutOfDomain, "numeric warp evaluated outside its sampled interval");
  }
  std::pair<std::size_t, double> locate(double t) const {
    double s = (t - grid_.min()) / grid_.step();
    auto k = static_cast<std::ptrdiff_t>(std::floor(s));
    k = std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(g_.size()) - 2);
    return {static_cast<std::size_t>(k), s - static_cast<double>(k)};
  }
  double hermite(std::size_t k, double s) const {
    const double d = grid_.step();
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * H_[k] + (s3 - 2 * s2 + s) * d * g_[k] + (-2 * s3 + 3 * s2) * H_[k + 1] +
           (s3 - s2) * d * g_[k + 1];
  }
  double hermite_slope(std::size_t k, double s) const {
    const double d = grid_.step();
    const double s2 = s * s;
    return ((6 * s2 - 6 * s) * H_[k] + (3 * s2 - 4 * s + 1) * d * g_[k] + (-6 * s2 + 6 * s) * H_[k + 1] +
            (3 * s2 - 2 * s) * d * g_[k + 1]) /
           d;
  }

  TimeGrid grid_;
  std::vector<double> g_;
  std::vector<double> H_;
  numerics::CubicSpline spline_;
};

Interval limits_of_h(const detail::WarpModel& m) {
  const Interval d = m.domain();
  if (d.lo > d.hi) return {kInf, -kInf};
  auto at = [&m](double t, double fallback) {
    if (std::isfinite(t)) return m.h(t);
    // Probe far out: stays finite only when h saturates (e.g. exp-rate).
    const double far = std::copysign(1e6, t);
    const double v = m.h(far);
    return std::isfinite(v) && std::abs(v) < 1e5 ? v : fallback;
  };
  return {at(d.lo, -kInf), at(d.hi, kInf)};
}

}  // namespace

Warp::Warp(std::shared_ptr<const detail::WarpModel> model, std::string family, std::vector<double> params,
           bool monotone, double t0, double c0)
    : model_(std::move(model)),
      family_(std::move(family)),
      params_(std::move(params)),
      monotone_(monotone),
      t0_(t0),
      c0_(c0) {
  shift_ = c0_ - model_->h(t0_);
  const Interval base = limits_of_h(*model_);
  range_ = {base.lo + shift_, base.hi + shift_};
}

double Warp::h_inv(double u) const {
  if (!monotone_) throw Error(ErrorCode::NonMonotoneWarp, family_ + " warp is not monotone; h_inv unavailable");
  return model_->h_inv(u - shift_);
}

std::vector<double> Warp::sample_g(const TimeGrid& grid) const {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = g(grid[i]);
  return v;
}

std::vector<double> Warp::sample_h(const TimeGrid& grid) const {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = h(grid[i]);
  return v;
}

void Warp::require_monotone_on(double lo, double hi) const {
  if (!monotone_) throw Error(ErrorCode::NonMonotoneWarp, family_ + " warp is not monotone");
  const Interval d = domain();
  const double eps = 1e-12 * (1.0 + std::abs(lo) + std::abs(hi));
  if (lo < d.lo - eps || hi > d.hi + eps || !(g(lo) > 0.0) || !(g(hi) > 0.0))
    throw Error(ErrorCode::NonMonotoneWarp,
                family_ + " warp is not monotone on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Warp make_analytic_warp(std::string_view name, std::span<const double> params, const WarpOptions& opts) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw Error(ErrorCode::NonMonotoneParameters,
                  std::string(name) + " expects " + std::to_string(n) + " parameter(s)");
  };
  auto reject = [&](const std::string& why) {
    if (opts.validate) throw Error(ErrorCode::NonMonotoneParameters, std::string(name) + ": " + why);
  };
  std::vector<double> p(params.begin(), params.end());
  std::shared_ptr<const detail::WarpModel> model;
  bool monotone = true;

  if (name == "identity") {
    need(0);
    model = std::make_shared<Linear>(1.0);
  } else if (name == "zero") {
    need(0);
    model = std::make_shared<Linear>(0.0);
    monotone = false;
  } else if (name == "linear-scale") {
    need(1);
    if (!(p[0] > 0.0)) {
      reject("alpha must be > 0");
      monotone = false;
    }
    model = std::make_shared<Linear>(p[0]);
  } else if (name == "chirp") {
    need(2);
    if (p[1] == 0.0 && !(p[0] > 0.0)) {
      reject("alpha must be > 0 when beta == 0");
      monotone = false;
    }
    model = std::make_shared<Chirp>(p[0], p[1]);
  } else if (name == "sin-perturbed") {
    need(2);
    if (!(std::abs(p[0] * p[1]) < 1.0)) {
      reject("|a * omega| must be < 1");
      monotone = false;
    }
    model = std::make_shared<SinPerturbed>(p[0], p[1]);
  } else if (name == "exp-rate") {
    need(1);
    if (p[0] == 0.0) {
      reject("kappa must be nonzero (use identity)");
      monotone = false;
    }
    model = std::make_shared<ExpRate>(p[0] == 0.0 ? 1e-300 : p[0]);
  } else {
    throw Error(ErrorCode::UnknownFamily, "unknown warp family '" + std::string(name) + "'");
  }
  if (monotone && !model->domain().contains(opts.t0))
    throw Error(ErrorCode::OutOfDomain, std::string(name) + ": reference time t0 outside the monotone domain");
  return Warp(std::move(model), std::string(name), std::move(p), monotone, opts.t0, opts.c0);
}

Warp make_numeric_warp(const TimeGrid& grid, std::span<const double> g_samples, double t0, double c0,
                       double tolerance) {
  if (g_samples.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "g samples do not match the time grid");
  for (double v : g_samples)
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorCode::NonPositiveG, "g must be finite and strictly positive at every sample");
  if (grid.size() < 5) throw Error(ErrorCode::GridTooCoarse, "numeric warp needs at least 5 samples");
  if (!(t0 >= grid.min() && t0 <= grid.max())) throw Error(ErrorCode::OutOfDomain, "t0 outside the sampled interval");

  std::vector<double> g(g_samples.begin(), g_samples.end());
  std::vector<double> H = numerics::cumulative_simpson(g, grid.step());

  // Richardson self-estimate: Simpson on every other sample, compared at the last common node.
  std::size_t last = (grid.size() - 1) / 4 * 4;
  if (last >= 4) {
    std::vector<double> coarse;
    for (std::size_t i = 0; i <= last; i += 2) coarse.push_back(g[i]);
    const auto Hc = numerics::cumulative_simpson(coarse, 2.0 * grid.step());
    const double estimate = std::abs(Hc.back() - H[last]) / 15.0;
    if (estimate > tolerance * (1.0 + std::abs(H[last])))
      throw Error(ErrorCode::GridTooCoarse,
                  "cumulative quadrature error estimate " + std::to_string(estimate) + " exceeds tolerance");
  }
  auto model = std::make_shared<Numeric>(grid, std::move(g), std::move(H));
  return Warp(std::move(model), "numeric", {}, true, t0, c0);
}

MonotonicityReport check_monotone(const Warp& w, const TimeGrid& grid) {
  MonotonicityReport r;
  r.min_g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = w.g(grid[i]);
    if (v < r.min_g) {
      r.min_g = v;
      r.argmin_t = grid[i];
    }
  }
  r.pass = r.min_g > 0.0;
  return r;
}

}  // namespace warpspec
