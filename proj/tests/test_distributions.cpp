#include <cmath>
#include <vector>

#include "support.hpp"
#include "warpspec/distributions.hpp"
#include "warpspec/test_functions.hpp"

using namespace warpspec;
using namespace wstest;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidGrid;
}

const TestFunction kGauss(TestFunctionKind::gaussian, {});

TestFunction hermite(int n) { return {TestFunctionKind::hermite, {double(n)}}; }

}  // namespace

TEST_CASE("test function Fourier pairs match quadrature") {
  for (const auto& phi : {kGauss, TestFunction(TestFunctionKind::gaussian, {0.7, 0.4}), hermite(1), hermite(3)}) {
    const std::size_t n = 4001;
    const double lo = -20.0, step = 40.0 / (n - 1);
    for (double u : {-2.0, 0.0, 0.6, 3.1}) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double e = lo + step * j;
        s += phi(e) * std::polar(1.0, -e * u);
      }
      s *= step * kInvSqrt2Pi;
      INFO(phi.describe(), " u=", u);
      CHECK(std::abs(s - phi.fourier(u)) < 1e-12);
    }
  }
}

TEST_CASE("Hermite functions are orthonormal") {
  const std::size_t n = 8001;
  const double lo = -20.0, step = 40.0 / (n - 1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += hermite_function(a, lo + step * j) * hermite_function(b, lo + step * j);
      CHECK(std::abs(s * step - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("direct pairing: identity and linear-scale") {
  CHECK(std::abs(s_pairing_direct(warp("identity"), kGauss, 40.0) - 1.0) < 1e-6);
  CHECK(std::abs(s_pairing_direct(warp("linear-scale", {2.0}), kGauss, 40.0) - 0.5) < 1e-6);
}

TEST_CASE("Parseval pairing: identity and linear-scale") {
  CHECK(std::abs(s_pairing_parseval(warp("identity"), kGauss) - 1.0) < 1e-8);
  CHECK(std::abs(s_pairing_parseval(warp("linear-scale", {2.0}), kGauss) - 0.5) < 1e-8);
}

TEST_CASE("direct and Parseval agree for the sin-perturbed warp with Hermite-2") {
  const Warp w = warp("sin-perturbed", {0.3, 1.0});
  const auto conv = s_pairing_direct_converged(w, hermite(2), 5.0, 1e-5);
  CHECK(conv.converged);
  CHECK(std::abs(conv.value - s_pairing_parseval(w, hermite(2))) < 1e-4);
}

TEST_CASE("exp-rate pairings agree at a matched truncation") {
  const Warp w = warp("exp-rate", {0.5});
  ParsevalOptions o;
  o.T = 8.0;
  const cplx pars = s_pairing_parseval(w, kGauss, o);
  CHECK(std::abs(s_pairing_direct(w, kGauss, 8.0) - pars) < 1e-4);

  DensityOptions d;
  d.T = 8.0;
  const auto S = s_density(w, EnergyGrid(-10.0, 10.0, 2001), d);
  CHECK(std::abs(pair_density(S, kGauss) - pars) < 1e-6);
}

TEST_CASE("exp-rate Parseval pairing without truncation is rejected") {
  CHECK(code_of([] { s_pairing_parseval(warp("exp-rate", {0.5}), kGauss); }) == ErrorCode::RangeTooNarrow);
}

TEST_CASE("exp-rate direct pairing at a large T exceeds the sampling budget") {
  CHECK(code_of([] { s_pairing_direct(warp("exp-rate", {0.5}), kGauss, 60.0); }) == ErrorCode::NyquistViolation);
}

TEST_CASE("explicit undersampled direct pairing is rejected") {
  CHECK(code_of([] { s_pairing_direct(warp("identity"), kGauss, 40.0, 16); }) == ErrorCode::NyquistViolation);
}

TEST_CASE("non-monotone warps are rejected") {
  CHECK(code_of([] { s_pairing_parseval(warp("zero"), kGauss); }) == ErrorCode::NonMonotoneWarp);
}

TEST_CASE("pairings are real for odd h and even phi") {
  for (const char* name : {"identity", "sin-perturbed"}) {
    const Warp w = name == std::string("identity") ? warp("identity") : warp("sin-perturbed", {0.3, 1.0});
    for (const auto& phi : {kGauss, hermite(0), hermite(2)}) {
      INFO(name, " ", phi.describe());
      CHECK(std::abs(s_pairing_direct(w, phi, 10.0).imag()) < 1e-8);
      CHECK(std::abs(s_pairing_parseval(w, phi).imag()) < 1e-8);
    }
  }
}

TEST_CASE("truncation differences shrink monotonically") {
  for (const auto& w : {warp("identity"), warp("sin-perturbed", {0.3, 1.0}), warp("chirp", {1.0, 0.02})}) {
    std::vector<cplx> v;
    for (double T : {0.5, 1.0, 2.0, 4.0, 8.0}) v.push_back(s_pairing_direct(w, kGauss, T));
    double prev = INFINITY;
    for (std::size_t i = 1; i < v.size(); ++i) {
      const double d = std::abs(v[i] - v[i - 1]);
      INFO(w.family(), " step ", i, " diff ", d);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("density spikes carry area 1 and 1/2") {
  const EnergyGrid e(-20.0, 20.0, 8001);
  const auto one = [](double) { return 1.0; };
  CHECK(std::abs(pair_density(s_density(warp("identity"), e), one) - 1.0) < 1e-3);
  CHECK(std::abs(pair_density(s_density(warp("linear-scale", {2.0}), e), one) - 0.5) < 1e-3);
  const auto S = s_density(warp("identity"), e);
  std::size_t peak = 0;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (std::abs(S.values[k]) > std::abs(S.values[peak])) peak = k;
  CHECK(std::abs(e[peak]) < 1e-9);
}

TEST_CASE("density pairing is linear in phi") {
  const auto S = s_density(warp("sin-perturbed", {0.3, 1.0}), EnergyGrid(-10.0, 10.0, 2001));
  const auto p1 = hermite(0), p2 = hermite(2);
  const double a = 0.7, b = -1.9;
  const cplx mixed = pair_density(S, [&](double e) { return a * p1(e) + b * p2(e); });
  CHECK(std::abs(mixed - (a * pair_density(S, p1) + b * pair_density(S, p2))) < 1e-13);
}

TEST_CASE("density pairing agrees with Parseval for a full-range warp") {
  const Warp w = warp("sin-perturbed", {0.3, 1.0});
  const auto S = s_density(w, EnergyGrid(-10.0, 10.0, 2001));
  CHECK(std::abs(pair_density(S, kGauss) - s_pairing_parseval(w, kGauss)) < 1e-6);
}
