#include "warpspec/test_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace warpspec {

double hermite_function(int n, double x) {
  // Stable three-term recurrence on the normalized functions.
  double p0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return p0;
  double p1 = std::sqrt(2.0) * x * p0;
  for (int k = 2; k <= n; ++k) {
    const double p2 = std::sqrt(2.0 / k) * x * p1 - std::sqrt((k - 1.0) / k) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

TestFunction::TestFunction(TestFunctionKind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {
  auto fill = [this](std::vector<double> defaults) {
    for (std::size_t i = params_.size(); i < defaults.size(); ++i) params_.push_back(defaults[i]);
  };
  switch (kind_) {
    case TestFunctionKind::gaussian:
      fill({1.0, 0.0});
      if (!(params_[0] > 0.0)) throw Error(ErrorCode::ConfigParseError, "gaussian sigma must be > 0");
      break;
    case TestFunctionKind::hermite:
      fill({0.0, 1.0});
      if (params_[0] < 0.0 || params_[1] <= 0.0) throw Error(ErrorCode::ConfigParseError, "bad hermite parameters");
      break;
    case TestFunctionKind::bump:
      fill({0.0, 1.0});
      if (!(params_[1] > 0.0)) throw Error(ErrorCode::ConfigParseError, "bump radius must be > 0");
      break;
  }
}

TestFunction TestFunction::parse(const std::string& kind, std::vector<double> params) {
  if (kind == "gaussian") return {TestFunctionKind::gaussian, std::move(params)};
  if (kind == "hermite") return {TestFunctionKind::hermite, std::move(params)};
  if (kind == "bump") return {TestFunctionKind::bump, std::move(params)};
  throw Error(ErrorCode::ConfigParseError, "unknown test function '" + kind + "'");
}

double TestFunction::operator()(double e) const {
  switch (kind_) {
    case TestFunctionKind::gaussian: {
      const double x = (e - params_[1]) / params_[0];
      return std::exp(-0.5 * x * x);
    }
    case TestFunctionKind::hermite:
      return hermite_function(static_cast<int>(params_[0]), e / params_[1]);
    case TestFunctionKind::bump: {
      const double x = (e - params_[0]) / params_[1];
      return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0;
    }
  }
  return 0.0;
}

cplx TestFunction::fourier(double u) const {
  switch (kind_) {
    case TestFunctionKind::gaussian: {
      const double s = params_[0];
      return s * std::exp(-0.5 * s * s * u * u) * std::polar(1.0, -params_[1] * u);
    }
    case TestFunctionKind::hermite: {
      // psi_n is an eigenfunction of F with eigenvalue (-i)^n.
      const int n = static_cast<int>(params_[0]);
      const double s = params_[1];
      static const cplx phase[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
      return s * phase[n % 4] * hermite_function(n, s * u);
    }
    case TestFunctionKind::bump:
      break;
  }
  throw Error(ErrorCode::ConfigParseError, "no closed-form Fourier transform for " + describe());
}

namespace {

double scan_extent(const std::function<double(double)>& mag, double tol, double step, double limit) {
  double peak = 0.0;
  for (double x = 0.0; x <= limit; x += step) peak = std::max({peak, mag(x), mag(-x)});
  double last = 0.0;
  for (double x = 0.0; x <= limit; x += step)
    if (mag(x) >= tol * peak || mag(-x) >= tol * peak) last = x;
  return last + step;
}

}  // namespace

Interval TestFunction::support(double tol) const {
  switch (kind_) {
    case TestFunctionKind::gaussian: {
      const double r = params_[0] * std::sqrt(-2.0 * std::log(tol));
      return {params_[1] - r, params_[1] + r};
    }
    case TestFunctionKind::hermite: {
      const double r = scan_extent([this](double x) { return std::abs((*this)(x)); }, tol, 0.01 * params_[1],
                                   60.0 * params_[1]);
      return {-r, r};
    }
    case TestFunctionKind::bump:
      return {params_[0] - params_[1], params_[0] + params_[1]};
  }
  return {};
}

double TestFunction::fourier_extent(double tol) const {
  switch (kind_) {
    case TestFunctionKind::gaussian:
      return std::sqrt(-2.0 * std::log(tol)) / params_[0];
    case TestFunctionKind::hermite:
      return scan_extent([this](double u) { return std::abs(fourier(u)); }, tol, 0.01 / params_[1],
                         60.0 / params_[1]);
    case TestFunctionKind::bump:
      // exp(-sqrt(r u)) type decay; a generous fixed bound.
      return 400.0 / params_[1];
  }
  return 0.0;
}

std::string TestFunction::describe() const {
  std::string name = kind_ == TestFunctionKind::gaussian ? "gaussian" : kind_ == TestFunctionKind::hermite ? "hermite" : "bump";
  name += "[";
  for (std::size_t i = 0; i < params_.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%g", i ? "," : "", params_[i]);
    name += buf;
  }
  return name + "]";
}

Rng::Rng(std::uint64_t seed) : state_(seed) {}

double Rng::uniform() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

SampledSignal make_signal(const std::string& kind, const std::vector<double>& params, const TimeGrid& grid,
                          std::uint64_t seed) {
  auto p = [&params](std::size_t i, double fallback) { return i < params.size() ? params[i] : fallback; };
  if (kind == "gaussian") {
    const double s = p(0, 1.0), c = p(1, 0.0);
    return SampledSignal::sample(grid, [=](double t) { return cplx(std::exp(-0.5 * (t - c) * (t - c) / (s * s))); });
  }
  if (kind == "hermite") {
    const int n = static_cast<int>(p(0, 0.0));
    const double s = p(1, 1.0);
    return SampledSignal::sample(grid, [=](double t) { return cplx(hermite_function(n, t / s)); });
  }
  if (kind == "noise") {
    const double band = p(0, 2.0), env = p(1, 2.0);
    const auto modes = static_cast<std::size_t>(p(2, 8.0));
    Rng rng(seed);
    std::vector<double> omega(modes);
    std::vector<cplx> amp(modes);
    for (std::size_t m = 0; m < modes; ++m) {
      omega[m] = band * (2.0 * rng.uniform() - 1.0);
      amp[m] = cplx(rng.normal(), rng.normal()) / std::sqrt(2.0 * static_cast<double>(modes));
    }
    return SampledSignal::sample(grid, [&](double t) {
      cplx acc = 0.0;
      for (std::size_t m = 0; m < modes; ++m) acc += amp[m] * std::polar(1.0, omega[m] * t);
      return acc * std::exp(-0.5 * t * t / (env * env));
    });
  }
  throw Error(ErrorCode::ConfigParseError, "unknown signal kind '" + kind + "'");
}

std::vector<CorpusEntry> signal_corpus(const TimeGrid& grid, std::uint64_t seed) {
  std::vector<CorpusEntry> c;
  c.push_back({"gaussian[1,0]", make_signal("gaussian", {1.0, 0.0}, grid)});
  c.push_back({"gaussian[0.5,1]", make_signal("gaussian", {0.5, 1.0}, grid)});
  c.push_back({"gaussian[1.5,-1]", make_signal("gaussian", {1.5, -1.0}, grid)});
  for (int n = 0; n < 4; ++n)
    c.push_back({"hermite[" + std::to_string(n) + "]", make_signal("hermite", {double(n), 1.0}, grid)});
  for (std::uint64_t k = 0; k < 3; ++k)
    c.push_back({"noise[seed+" + std::to_string(k) + "]", make_signal("noise", {2.0, 1.5, 8.0}, grid, seed + k)});
  return c;
}

}  // namespace warpspec
