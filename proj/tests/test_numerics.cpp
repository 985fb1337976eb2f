#include <cmath>
#include <numeric>
#include <vector>

#include "support.hpp"
#include "warpspec/numerics.hpp"

using namespace warpspec;
using namespace warpspec::numerics;

namespace {

double integrate(const std::vector<double>& w, double lo, double step, double (*f)(double)) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * f(lo + step * static_cast<double>(i));
  return s;
}

double cubic(double x) { return 3.0 * x * x * x - x * x + 2.0; }

}  // namespace

TEST_CASE("Simpson weights are exact on cubics for odd and even counts") {
  for (std::size_t n : {5, 6, 11, 12, 101}) {
    const double step = 2.0 / static_cast<double>(n - 1);
    const auto w = simpson_weights(n, step);
    // integral of 3x^3 - x^2 + 2 over [-1, 1]
    CHECK(std::abs(integrate(w, -1.0, step, cubic) - (4.0 - 2.0 / 3.0)) < 1e-13);
  }
}

TEST_CASE("Gregory weights are exact on cubics") {
  for (std::size_t n : {8, 9, 40}) {
    const double step = 2.0 / static_cast<double>(n - 1);
    const auto w = gregory_weights(n, step);
    CHECK(std::abs(integrate(w, -1.0, step, cubic) - (4.0 - 2.0 / 3.0)) < 1e-13);
  }
}

TEST_CASE("cumulative Simpson matches the antiderivative") {
  const std::size_t n = 401;
  const double step = 4.0 / (n - 1);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(step * i);
  const auto H = cumulative_simpson(y, step);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(H[i] - (std::exp(step * i) - 1.0)) < 1e-9 * std::exp(step * i));
}

TEST_CASE("cubic spline reproduces smooth data") {
  const std::size_t n = 201;
  const double step = 10.0 / (n - 1);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::sin(step * i);
  const CubicSpline s(0.0, step, y);
  for (std::size_t i = 0; i < n; ++i) CHECK(s(step * i) == doctest::Approx(y[i]).epsilon(1e-14));
  for (double x = 1.0; x < 9.0; x += 0.0731) CHECK(std::abs(s(x) - std::sin(x)) < 1e-6);
}

TEST_CASE("fourth-order derivative") {
  std::vector<double> errs, steps;
  for (std::size_t n : {41, 81, 161}) {
    const double step = 2.0 / (n - 1);
    std::vector<cplx> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::polar(1.0, 2.0 * step * i);
    const auto d = derivative4(f, step);
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(d[i] - cplx(0, 2) * f[i]));
    errs.push_back(e);
    steps.push_back(step);
  }
  CHECK(std::abs(loglog_slope(steps, errs) - 4.0) < 0.3);
}

TEST_CASE("Tukey window") {
  const auto w = tukey_window(101, 0.2);
  CHECK(w.front() == doctest::Approx(0.0));
  CHECK(w.back() == doctest::Approx(0.0));
  CHECK(w[50] == 1.0);
  for (std::size_t i = 0; i < 101; ++i) CHECK(std::abs(w[i] - w[100 - i]) < 1e-15);
}

TEST_CASE("monotone inversion") {
  auto f = [](double x) { return x + 0.5 * std::sin(x); };
  auto fp = [](double x) { return 1.0 + 0.5 * std::cos(x); };
  for (double u : {-3.0, 0.0, 0.7, 5.0}) {
    const double x = invert_monotone(f, fp, u, -10.0, 10.0);
    CHECK(std::abs(f(x) - u) < 1e-13);
  }
}

TEST_CASE("log-log slope") {
  const std::vector<double> p = {1.0, 0.5, 0.25, 0.125};
  std::vector<double> e;
  for (double x : p) e.push_back(7.0 * x * x);
  CHECK(loglog_slope(p, e) == doctest::Approx(2.0).epsilon(1e-12));
}
