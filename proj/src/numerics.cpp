#include "warpspec/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace warpspec::numerics {

std::vector<double> simpson_weights(std::size_t n, double step) {
  std::vector<double> w(n, 0.0);
  if (n < 2) return w;
  if (n == 2) {
    w[0] = w[1] = 0.5 * step;
    return w;
  }
  if (n == 4) {
    const double c = 3.0 * step / 8.0;
    w[0] = c;
    w[1] = 3.0 * c;
    w[2] = 3.0 * c;
    w[3] = c;
    return w;
  }
  // Simpson over the first m samples (m odd), 3/8 over the trailing four when n is even.
  const std::size_t m = (n % 2 == 1) ? n : n - 3;
  for (std::size_t i = 0; i + 2 < m; i += 2) {
    w[i] += step / 3.0;
    w[i + 1] += 4.0 * step / 3.0;
    w[i + 2] += step / 3.0;
  }
  if (m != n) {
    const double c = 3.0 * step / 8.0;
    w[n - 4] += c;
    w[n - 3] += 3.0 * c;
    w[n - 2] += 3.0 * c;
    w[n - 1] += c;
  }
  return w;
}

std::vector<double> gregory_weights(std::size_t n, double step) {
  if (n < 8) throw Error(ErrorCode::GridTooCoarse, "Gregory rule needs at least 8 samples");
  std::vector<double> w(n, step);
  const double end[4] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0, 1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    w[i] = end[i] * step;
    w[n - 1 - i] = end[i] * step;
  }
  return w;
}

std::vector<double> cumulative_simpson(std::span<const double> y, double step) {
  const std::size_t n = y.size();
  std::vector<double> c(n, 0.0);
  if (n < 3) {
    if (n == 2) c[1] = 0.5 * step * (y[0] + y[1]);
    return c;
  }
  for (std::size_t j = 2; j < n; j += 2) c[j] = c[j - 2] + step / 3.0 * (y[j - 2] + 4.0 * y[j - 1] + y[j]);
  // Odd nodes: quadratic through the neighbours, integrated over one interval.
  for (std::size_t j = 1; j < n; j += 2) {
    if (j + 1 < n)
      c[j] = c[j - 1] + step / 12.0 * (5.0 * y[j - 1] + 8.0 * y[j] - y[j + 1]);
    else
      c[j] = c[j - 1] + step / 12.0 * (-y[j - 2] + 8.0 * y[j - 1] + 5.0 * y[j]);
  }
  return c;
}

CubicSpline::CubicSpline(double x0, double step, std::vector<double> y)
    : x0_(x0), step_(step), y_(std::move(y)), m_(y_.size(), 0.0) {
  const std::size_t n = y_.size();
  if (n < 3) return;
  // Thomas solve of the natural-spline system for interior second derivatives.
  std::vector<double> c(n, 0.0), d(n, 0.0);
  const double h2 = step_ * step_;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double rhs = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / h2;
    const double denom = 4.0 - c[i - 1];
    c[i] = 1.0 / denom;
    d[i] = (rhs - d[i - 1]) / denom;
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m_[i] = d[i] - c[i] * m_[i + 1];
    if (i == 1) break;
  }
}

double CubicSpline::operator()(double x) const {
  const std::size_t n = y_.size();
  if (n == 1) return y_[0];
  double s = (x - x0_) / step_;
  auto i = static_cast<std::ptrdiff_t>(std::floor(s));
  i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 2);
  const double a = s - static_cast<double>(i);
  const double b = 1.0 - a;
  const auto k = static_cast<std::size_t>(i);
  const double h2 = step_ * step_;
  return b * y_[k] + a * y_[k + 1] + ((b * b * b - b) * m_[k] + (a * a * a - a) * m_[k + 1]) * h2 / 6.0;
}

ComplexSpline::ComplexSpline(double x0, double step, std::span<const cplx> y) {
  std::vector<double> re(y.size()), im(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    re[i] = y[i].real();
    im[i] = y[i].imag();
  }
  re_ = CubicSpline(x0, step, std::move(re));
  im_ = CubicSpline(x0, step, std::move(im));
}

std::vector<cplx> derivative4(std::span<const cplx> f, double step) {
  const std::size_t n = f.size();
  if (n < 5) throw Error(ErrorCode::GridTooCoarse, "fourth-order derivative needs at least 5 samples");
  std::vector<cplx> d(n);
  const double s = 1.0 / (12.0 * step);
  for (std::size_t j = 2; j + 2 < n; ++j) d[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) * s;
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * s;
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * s;
  return d;
}

std::vector<double> tukey_window(std::size_t n, double fraction) {
  std::vector<double> w(n, 1.0);
  if (n < 2 || fraction <= 0.0) return w;
  const double width = 0.5 * fraction * static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::min(static_cast<double>(i), static_cast<double>(n - 1 - i));
    if (x < width) w[i] = 0.5 * (1.0 - std::cos(kPi * x / width));
  }
  return w;
}

double invert_monotone(const std::function<double(double)>& f, const std::function<double(double)>& fprime,
                       double target, double lo, double hi, double tol) {
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo > 0.0 || fhi < 0.0) throw Error(ErrorCode::OutOfDomain, "target outside the bracket of a monotone inversion");
  // Bisection down to a bracket small relative to its position.
  const double narrow = 1e-6 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  while (hi - lo > narrow) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid) - target;
    if (fm == 0.0) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    const double fx = f(x) - target;
    if (fx == 0.0) return x;
    (fx < 0.0 ? lo : hi) = x;
    const double dfx = fprime(x);
    double next = (dfx > 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double dx = std::abs(next - x);
    x = next;
    if (dx < tol * (1.0 + std::abs(x))) break;
  }
  return x;
}

double loglog_slope(std::span<const double> param, std::span<const double> err) {
  const std::size_t n = std::min(param.size(), err.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(param[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  if (n < 2 || std::abs(denom) < 1e-300) return std::numeric_limits<double>::quiet_NaN();
  return (dn * sxy - sx * sy) / denom;
}

}  // namespace warpspec::numerics
