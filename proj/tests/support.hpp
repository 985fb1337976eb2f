#pragma once

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "warpspec/signal.hpp"
#include "warpspec/warp.hpp"

namespace wstest {

using warpspec::cplx;
using warpspec::kPi;

struct CatalogEntry {
  std::string name;
  std::vector<double> params;
};

// The analytic catalog with the parameters used throughout the tests.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = {
      {"identity", {}},
      {"linear-scale", {2.0}},
      {"chirp", {1.0, 0.02}},
      {"sin-perturbed", {0.3, 1.0}},
      {"exp-rate", {0.5}},
  };
  return c;
}

inline warpspec::Warp warp(const std::string& name, std::vector<double> params = {}) {
  return warpspec::make_analytic_warp(name, params);
}

inline warpspec::Warp warp(const CatalogEntry& e) { return warp(e.name, e.params); }

inline warpspec::SampledSignal gaussian(const warpspec::TimeGrid& g, double sigma = 1.0, double center = 0.0) {
  return warpspec::SampledSignal::sample(
      g, [=](double t) { return cplx(std::exp(-0.5 * (t - center) * (t - center) / (sigma * sigma))); });
}

inline double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace wstest
