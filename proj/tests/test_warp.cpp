#include <cmath>
#include <vector>

#include "support.hpp"
#include "warpspec/numerics.hpp"
#include "warpspec/warp.hpp"

using namespace warpspec;
using namespace wstest;

TEST_CASE("identity warp") {
  const Warp w = warp("identity");
  for (double t : {-3.0, 0.0, 1.7}) {
    CHECK(w.h(t) == doctest::Approx(t).epsilon(1e-15));
    CHECK(w.g(t) == 1.0);
    CHECK(w.h_inv(t) == doctest::Approx(t).epsilon(1e-15));
  }
}

TEST_CASE("linear-scale warp") {
  const Warp w = warp("linear-scale", {2.0});
  for (double t : {-3.0, 0.5, 4.0}) {
    CHECK(std::abs(w.h(t) - 2.0 * t) < 1e-15);
    CHECK(w.g(t) == 2.0);
    CHECK(std::abs(w.h_inv(t) - t / 2.0) < 1e-15);
  }
}

TEST_CASE("sin-perturbed warp inverts by root finding") {
  const Warp w = warp("sin-perturbed", {0.3, 1.0});
  for (double t = -10.0; t <= 10.0; t += 0.37) {
    CHECK(std::abs(w.h(t) - (t + 0.3 * std::sin(t))) < 1e-14);
    CHECK(std::abs(w.g(t) - (1.0 + 0.3 * std::cos(t))) < 1e-15);
  }
  for (double u = -12.0; u <= 12.0; u += 0.41) CHECK(std::abs(w.h(w.h_inv(u)) - u) < 1e-12);
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(warp("cubic"), Error);
  try {
    warp("cubic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFamily);
  }
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidGrid;
  };
  CHECK(code_of([] { warp("sin-perturbed", {2.0, 1.0}); }) == ErrorCode::NonMonotoneParameters);
  CHECK(code_of([] { warp("sin-perturbed", {1.0, 1.0}); }) == ErrorCode::NonMonotoneParameters);
  CHECK(code_of([] { warp("linear-scale", {-1.0}); }) == ErrorCode::NonMonotoneParameters);
  CHECK(code_of([] { warp("exp-rate", {0.0}); }) == ErrorCode::NonMonotoneParameters);
}

TEST_CASE("h' matches g for every catalog warp") {
  for (const auto& e : catalog()) {
    const Warp w = warp(e);
    const Interval dom = w.domain();
    const double lo = std::max(-8.0, dom.lo + 0.5), hi = std::min(8.0, dom.hi - 0.5);
    for (double t = lo; t <= hi; t += 0.173) {
      const double step = 1e-5;
      const double fd = (w.h(t + step) - w.h(t - step)) / (2.0 * step);
      INFO(e.name, " t=", t);
      CHECK(std::abs(fd - w.g(t)) / (1.0 + std::abs(w.g(t))) < 1e-8);
    }
  }
}

TEST_CASE("h_inv inverts h for every catalog warp") {
  for (const auto& e : catalog()) {
    const Warp w = warp(e);
    const Interval dom = w.domain();
    const double lo = std::max(-10.0, dom.lo + 0.5), hi = std::min(10.0, dom.hi - 0.5);
    for (double t = lo; t <= hi; t += 0.211) {
      INFO(e.name, " t=", t);
      CHECK(std::abs(w.h_inv(w.h(t)) - t) < 1e-10);
    }
  }
}

TEST_CASE("integration constant") {
  WarpOptions o;
  o.t0 = 1.0;
  o.c0 = 5.0;
  const double p[] = {0.3, 1.0};
  const Warp w = make_analytic_warp("sin-perturbed", p, o);
  CHECK(std::abs(w.h(1.0) - 5.0) < 1e-14);
  CHECK(std::abs(w.h_inv(5.0) - 1.0) < 1e-12);
  const Warp base = warp("sin-perturbed", {0.3, 1.0});
  CHECK(std::abs((w.h(3.0) - w.h(-2.0)) - (base.h(3.0) - base.h(-2.0))) < 1e-13);
}

TEST_CASE("zero warp is the neutral non-monotone phase") {
  const Warp z = warp("zero");
  CHECK(z.g(1.0) == 0.0);
  CHECK(z.h(3.0) == 0.0);
  CHECK_FALSE(z.monotone());
  CHECK_THROWS_AS(z.h_inv(0.0), Error);
}

TEST_CASE("numeric warp from g = 1") {
  const TimeGrid g(-5.0, 5.0, 1001);
  const std::vector<double> ones(g.size(), 1.0);
  const Warp w = make_numeric_warp(g, ones);
  for (double t = -5.0; t <= 5.0; t += 0.0913) CHECK(std::abs(w.h(t) - t) < 1e-12);
}

TEST_CASE("numeric warp from g = 2t + 3") {
  const TimeGrid g(0.0, 5.0, 4097);
  std::vector<double> s(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s[i] = 2.0 * g[i] + 3.0;
  const Warp w = make_numeric_warp(g, s);
  CHECK(std::abs(w.h(2.0) - 10.0) < 1e-8);
  for (double t = 0.0; t <= 5.0; t += 0.137) CHECK(std::abs(w.h(t) - (t * t + 3.0 * t)) < 1e-8);
  CHECK(std::abs(w.h(w.h_inv(17.5)) - 17.5) < 1e-10);
}

TEST_CASE("numeric warp from g = cos t") {
  const TimeGrid g(-1.0, 1.0, 2001);
  std::vector<double> s(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s[i] = std::cos(g[i]);
  const Warp w = make_numeric_warp(g, s);
  CHECK(std::abs(w.h(0.5) - std::sin(0.5)) < 1e-10);
  CHECK(std::abs(w.h(0.5) - 0.479425538604203) < 1e-10);
}

TEST_CASE("numeric warp rejects non-positive g") {
  const TimeGrid g(-1.0, 1.0, 101);
  std::vector<double> s(g.size(), 1.0);
  s[50] = 0.0;
  try {
    make_numeric_warp(g, s);
    FAIL("expected NonPositiveG");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveG);
  }
}

TEST_CASE("numeric warp flags a coarse grid") {
  const TimeGrid g(-10.0, 10.0, 9);
  std::vector<double> s(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s[i] = 1.0 + 0.9 * std::cos(3.0 * g[i]);
  try {
    make_numeric_warp(g, s);
    FAIL("expected GridTooCoarse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GridTooCoarse);
  }
}

TEST_CASE("numeric warp converges at fourth order") {
  const Warp ref = warp("sin-perturbed", {0.3, 1.0});
  std::vector<double> dts, errs;
  for (std::size_t n : {33, 65, 129, 257, 513}) {
    const TimeGrid g(-4.0, 4.0, n);
    const Warp w = make_numeric_warp(g, ref.sample_g(g), 0.0, 0.0, 1.0);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(w.h(g[i]) - ref.h(g[i])));
    dts.push_back(g.step());
    errs.push_back(err);
  }
  const double slope = numerics::loglog_slope(dts, errs);
  INFO("slope=", slope);
  CHECK(std::abs(slope - 4.0) < 0.3);
}

TEST_CASE("check_monotone") {
  const TimeGrid g(-kPi, kPi, 2001);
  const auto id = check_monotone(warp("identity"), g);
  CHECK(id.pass);
  CHECK(id.min_g == 1.0);
  const auto sp = check_monotone(warp("sin-perturbed", {0.3, 1.0}), g);
  CHECK(sp.pass);
  CHECK(std::abs(sp.min_g - 0.7) < 1e-12);
  WarpOptions o;
  o.validate = false;
  const double p[] = {2.0, 1.0};
  const auto bad = check_monotone(make_analytic_warp("sin-perturbed", p, o), g);
  CHECK_FALSE(bad.pass);
  CHECK(std::abs(bad.min_g + 1.0) < 1e-12);
  CHECK(std::abs(std::abs(bad.argmin_t) - kPi) < 1e-12);
}

TEST_CASE("chirp domain and range") {
  const Warp w = warp("chirp", {1.0, 0.02});
  CHECK(std::abs(w.domain().lo + 25.0) < 1e-12);
  CHECK_FALSE(w.domain().bounded_above());
  CHECK(std::abs(w.range().lo - w.h(-25.0)) < 1e-12);
  CHECK_THROWS_AS(w.require_monotone_on(-30.0, 0.0), Error);
  CHECK_NOTHROW(w.require_monotone_on(-20.0, 20.0));
}
