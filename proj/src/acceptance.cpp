#include "warpspec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "warpspec/convergence.hpp"
#include "warpspec/csv.hpp"
#include "warpspec/distributions.hpp"
#include "warpspec/operators.hpp"
#include "warpspec/schrodinger.hpp"
#include "warpspec/test_functions.hpp"
#include "warpspec/transforms.hpp"

namespace warpspec {
namespace fs = std::filesystem;

namespace {

struct CatalogEntry {
  std::string family;
  std::vector<double> params;
  double half_width;  // transform time grid is [-half_width, half_width]
  Warp warp() const { return make_analytic_warp(family, params); }
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c{
      {"identity", {}, 20.0},   {"linear-scale", {2.0}, 20.0},     {"chirp", {1.0, 0.02}, 20.0},
      {"sin-perturbed", {0.3, 1.0}, 20.0}, {"exp-rate", {0.5}, 10.0},
  };
  return c;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

// ---- 1: reduction identities ----
Outcome reduction_identities(const AcceptanceOptions& o, const fs::path& dir) {
  csv::Table t({"warp", "signal", "modulated_defect", "warped_defect"});
  double worst_m = 0.0, worst_w = 0.0;
  const std::size_t n_u = o.oversample * (o.n - 1) + 1;
  for (const auto& c : catalog()) {
    const Warp w = c.warp();
    const TimeGrid g(-c.half_width, c.half_width, o.n);
    for (const auto& s : signal_corpus(g, o.seed)) {
      const double m = modulated_reduction_check(s.signal, w);
      const double d = warped_reduction_check(s.signal, w, n_u);
      worst_m = std::max(worst_m, m);
      worst_w = std::max(worst_w, d);
      t.row().cell(c.family).cell(s.name).cell(m).cell(d);
    }
  }
  t.write(dir / "c01_reduction.csv");
  return {worst_m < 1e-6 && worst_w < 1e-6,
          "max modulated defect " + sci(worst_m) + ", max warped defect " + sci(worst_w) + " (tol 1e-6)"};
}

// ---- 2: resolution of unity ----
Outcome resolution_of_unity(const AcceptanceOptions& o, const fs::path& dir) {
  csv::Table t({"warp", "signal", "additive_error", "multiplicative_error"});
  double worst = 0.0, worst_identity = 0.0;
  const std::size_t n_u = o.oversample * (o.n - 1) + 1;
  for (const auto& c : catalog()) {
    const Warp w = c.warp();
    const TimeGrid g(-c.half_width, c.half_width, o.n);
    for (const auto& s : signal_corpus(g, o.seed)) {
      const double a = resolution_roundtrip(s.signal, w, ResolutionFlavor::additive);
      const double m = resolution_roundtrip(s.signal, w, ResolutionFlavor::multiplicative, n_u);
      double& slot = c.family == "identity" ? worst_identity : worst;
      slot = std::max({slot, a, m});
      t.row().cell(c.family).cell(s.name).cell(a).cell(m);
    }
  }
  t.write(dir / "c02_resolution.csv");
  return {worst < 1e-7 && worst_identity < 1e-10,
          "max round-trip error " + sci(worst) + " (tol 1e-7), identity " + sci(worst_identity) + " (tol 1e-10)"};
}

// ---- 3: smeared bi-orthogonality ----
Outcome biorthogonality(const AcceptanceOptions&, const fs::path& dir) {
  csv::Table t({"warp", "h_window", "re", "im", "error"});
  const double e0 = 0.3, sigma = 0.1;
  const auto phi = [&](double e) { return std::exp(-(e - e0) * (e - e0) / (2.0 * sigma * sigma)); };
  const EnergyGrid eprime(e0 - 15.0 * sigma, e0 + 15.0 * sigma, 601);
  bool pass = true;
  double worst_final = 0.0;
  for (const auto& c : catalog()) {
    const Warp w = c.warp();
    if (!(w.range().lo < -40.0 && w.range().hi > 40.0)) continue;  // needs an h-window of width 80
    double prev = INFINITY;
    for (double width : {10.0, 20.0, 40.0, 80.0}) {
      const TimeGrid tg = h_window_grid(w, width, 4001);
      const cplx v = smeared_biorth(e0, w, tg, eprime, phi);
      const double err = std::abs(v - phi(e0));
      t.row().cell(c.family).cell(width).cell(v.real()).cell(v.imag()).cell(err);
      if (!(err < prev)) pass = false;
      prev = err;
    }
    worst_final = std::max(worst_final, prev);
  }
  t.write(dir / "c03_biorth.csv");
  pass = pass && worst_final < 1e-3;
  return {pass, "error at h-window 80: " + sci(worst_final) + " (tol 1e-3), monotone over widths 10..80: " +
                    (pass ? "yes" : "no")};
}

// ---- 4: eigenrelations ----
Outcome eigenrelations(const AcceptanceOptions&, const fs::path& dir) {
  csv::Table t({"warp", "operator", "n", "dt", "max_residual"});
  csv::Table slopes({"warp", "operator", "slope"});
  const std::size_t sizes[] = {1024, 2048, 4096, 8192};
  double worst_slope_dev = 0.0, worst_4096 = 0.0;
  for (const auto& c : catalog()) {
    const Warp w = c.warp();
    const double half = c.family == "exp-rate" ? 4.0 : c.half_width;
    for (auto op : {EnergyOperator::additive, EnergyOperator::multiplicative}) {
      const char* name = op == EnergyOperator::additive ? "additive" : "multiplicative";
      std::vector<ConvergenceRow> rows;
      for (std::size_t n : sizes) {
        const TimeGrid g(-half, half, n);
        double r = 0.0;
        for (int e = -3; e <= 3; ++e) r = std::max(r, eigen_residual(op, w, e, g));
        rows.push_back({g.step(), r});
        if (n == 4096) worst_4096 = std::max(worst_4096, r);
        t.row().cell(c.family).cell(name).cell(static_cast<long long>(n)).cell(g.step()).cell(r);
      }
      const auto table = convergence_table("dt", "max_residual", rows);
      slopes.row().cell(c.family).cell(name).cell(table.slope);
      worst_slope_dev = std::max(worst_slope_dev, std::abs(table.slope - 4.0));
    }
  }
  t.write(dir / "c04_eigen.csv");
  slopes.write(dir / "c04_slopes.csv");
  return {worst_slope_dev <= 0.3 && worst_4096 < 1e-6,
          "max |slope - 4| " + sci(worst_slope_dev) + " (tol 0.3), max residual at n=4096 " + sci(worst_4096) +
              " (tol 1e-6)"};
}

// ---- 5: self-adjointness dichotomy ----
Outcome adjointness(const AcceptanceOptions& o, const fs::path& dir) {
  csv::Table t({"warp", "operator", "pair", "defect", "oracle"});
  double worst_add = 0.0;
  for (const auto& c : catalog()) {
    const Warp w = c.warp();
    const TimeGrid g(-c.half_width, c.half_width, o.n);
    for (int p = 0; p < 10; ++p) {
      const auto f = taper(make_signal("noise", {2.0, 1.5, 8}, g, o.seed + 1000 + 2 * p));
      const auto k = taper(make_signal("noise", {2.0, 1.5, 8}, g, o.seed + 1001 + 2 * p));
      const double d = adjoint_defect(EnergyOperator::additive, w, f, k);
      worst_add = std::max(worst_add, d);
      t.row().cell(c.family).cell("additive").cell(static_cast<long long>(p)).cell(d).cell(0.0);
    }
  }
  const double kappa = 0.5;
  const Warp w = make_analytic_warp("exp-rate", std::vector<double>{kappa});
  const TimeGrid g(-8.0, 8.0, o.n);
  const auto f = SampledSignal::sample(g, [](double x) { return cplx(std::exp(-x * x)); });
  const auto k = SampledSignal::sample(g, [](double x) { return cplx(x * std::exp(-x * x)); });
  const double d = adjoint_defect(EnergyOperator::multiplicative, w, f, k);
  // |int f k (1/g)' dt| with 1/g = e^{-kappa t}
  const double oracle = kappa * kappa / 4.0 * std::sqrt(kPi / 2.0) * std::exp(kappa * kappa / 8.0);
  t.row().cell("exp-rate").cell("multiplicative").cell("gauss,t*gauss").cell(d).cell(oracle);
  t.write(dir / "c05_adjoint.csv");
  const bool pass = worst_add < 1e-8 && d > 1e-3 && std::abs(d - oracle) < 1e-6;
  return {pass, "additive max defect " + sci(worst_add) + " (tol 1e-8); multiplicative exp-rate defect " + sci(d) +
                    " vs oracle " + sci(oracle) + ", gap " + sci(std::abs(d - oracle)) + " (tol 1e-6)"};
}

// ---- 6: distribution S(E) ----
Outcome distribution(const AcceptanceOptions&, const fs::path& dir) {
  csv::Table t({"warp", "phi", "direct_re", "direct_im", "parseval_re", "parseval_im", "difference", "T_used"});
  std::vector<TestFunction> phis{TestFunction(TestFunctionKind::gaussian, {})};
  for (int n = 0; n <= 3; ++n) phis.emplace_back(TestFunctionKind::hermite, std::vector<double>{double(n)});
  double worst = 0.0, identity_err = 0.0, linear_err = 0.0;
  for (const auto& c : catalog()) {
    const Warp w = c.warp();
    for (const auto& phi : phis) {
      cplx direct, pars;
      double T_used;
      if (w.range().bounded_below() || w.range().bounded_above()) {
        // h misses part of the real line: S pairs only at a matched truncation.
        T_used = 8.0;
        direct = s_pairing_direct(w, phi, T_used);
        pars = s_pairing_parseval(w, phi, {T_used});
      } else {
        const auto conv = s_pairing_direct_converged(w, phi, 5.0, 1e-5);
        direct = conv.value;
        T_used = conv.T_used;
        pars = s_pairing_parseval(w, phi);
      }
      const double diff = std::abs(direct - pars);
      worst = std::max(worst, diff);
      if (phi.kind() == TestFunctionKind::gaussian && c.family == "identity")
        identity_err = std::max(std::abs(direct - phi(0.0)), std::abs(pars - phi(0.0)));
      if (phi.kind() == TestFunctionKind::gaussian && c.family == "linear-scale")
        linear_err = std::max(std::abs(direct - 0.5 * phi(0.0)), std::abs(pars - 0.5 * phi(0.0)));
      t.row()
          .cell(c.family)
          .cell(phi.describe())
          .cell(direct.real())
          .cell(direct.imag())
          .cell(pars.real())
          .cell(pars.imag())
          .cell(diff)
          .cell(T_used);
    }
  }
  t.write(dir / "c06_distribution.csv");
  return {worst < 1e-4 && identity_err < 1e-6 && linear_err < 1e-6,
          "max |direct - parseval| " + sci(worst) + " (tol 1e-4); identity vs phi(0) " + sci(identity_err) +
              ", linear-scale vs phi(0)/2 " + sci(linear_err) + " (tol 1e-6)"};
}

struct SchrodingerSetup {
  std::string name;
  Hamiltonian1D H;
  std::vector<EigenPair> states;
};

std::vector<SchrodingerSetup> schrodinger_setups() {
  std::vector<SchrodingerSetup> s;
  const SpaceGrid hg(-10.0, 10.0, 401);
  auto Hh = build_hamiltonian(hg, PotentialSpec::parse("harmonic", {1.0}));
  s.push_back({"harmonic", Hh, eigensolve(Hh, 4)});
  const SpaceGrid bg(0.0, kPi, 401);
  auto Hb = build_hamiltonian(bg, PotentialSpec::parse("box", {}));
  s.push_back({"box", Hb, eigensolve(Hb, 4)});
  return s;
}

std::vector<std::pair<std::string, TimeDependence>> kinds_for(const CatalogEntry& c) {
  const Warp w = c.warp();
  const Warp second = make_analytic_warp("sin-perturbed", std::vector<double>{0.3, 1.0});
  return {{"additive", TimeDependence::additive(w)},
          {"multiplicative", TimeDependence::multiplicative(w)},
          {"combined", TimeDependence::combined(w, second)}};
}

// ---- 7: closed-form solutions vs residual and propagation ----
Outcome schrodinger_closed_forms(const AcceptanceOptions&, const fs::path& dir) {
  csv::Table res_t({"warp", "kind", "potential", "max_residual"});
  csv::Table cn_t({"warp", "kind", "potential", "dt", "final_error"});
  csv::Table slope_t({"warp", "kind", "potential", "slope"});
  const TimeGrid fine(0.0, 1.0, 1001);
  const TimeGrid out(0.0, 1.0, 11);
  const double dts[] = {1.6e-3, 8e-4, 4e-4, 2e-4, 1e-4};
  double worst_res = 0.0, worst_slope_dev = 0.0, worst_final = 0.0;
  const auto setups = schrodinger_setups();
  for (const auto& c : catalog()) {
    for (const auto& [kind, td] : kinds_for(c)) {
      for (const auto& s : setups) {
        double r = 0.0;
        for (const auto& ep : s.states) r = std::max(r, schrodinger_residual(separable_solution(ep, s.H.grid, td, fine), s.H, td));
        worst_res = std::max(worst_res, r);
        res_t.row().cell(c.family).cell(kind).cell(s.name).cell(r);

        const auto exact = separable_solution(s.states[1], s.H.grid, td, out);
        std::vector<ConvergenceRow> rows;
        for (double dt : dts) {
          const auto sub = static_cast<std::size_t>(std::llround(out.step() / dt));
          const auto prop = propagate_crank_nicolson(s.H, td, exact.slice(0), out, sub);
          const double err = slice_l2_distance(prop.field, exact, out.size() - 1);
          rows.push_back({dt, err});
          cn_t.row().cell(c.family).cell(kind).cell(s.name).cell(dt).cell(err);
        }
        worst_final = std::max(worst_final, rows.back().error);
        const auto table = convergence_table("dt", "final_error", rows);
        worst_slope_dev = std::max(worst_slope_dev, std::abs(table.slope - 2.0));
        slope_t.row().cell(c.family).cell(kind).cell(s.name).cell(table.slope);
      }
    }
  }
  res_t.write(dir / "c07_residual.csv");
  cn_t.write(dir / "c07_crank_nicolson.csv");
  slope_t.write(dir / "c07_slopes.csv");
  return {worst_res < 1e-6 && worst_slope_dev <= 0.2 && worst_final < 1e-4,
          "max residual " + sci(worst_res) + " (tol 1e-6); max |slope - 2| " + sci(worst_slope_dev) +
              " (tol 0.2); max final error at dt=1e-4 " + sci(worst_final) + " (tol 1e-4)"};
}

// ---- 8: cross-orthogonality ----
Outcome cross_orthogonality_check(const AcceptanceOptions&, const fs::path& dir) {
  csv::Table t({"warp", "kind", "potential", "i", "j", "max_separable", "propagated_at_T"});
  const TimeGrid tg(0.0, 1.0, 50);
  const auto sub = static_cast<std::size_t>(std::ceil(tg.step() / 1e-3));
  double worst_sep = 0.0, worst_prop = 0.0;
  const auto setups = schrodinger_setups();
  for (const auto& c : catalog()) {
    const Warp w = c.warp();
    const std::pair<std::string, TimeDependence> kinds[] = {{"additive", TimeDependence::additive(w)},
                                                            {"multiplicative", TimeDependence::multiplicative(w)}};
    for (const auto& [kind, td] : kinds) {
      for (const auto& s : setups) {
        std::vector<SpaceTimeField> sep, prop;
        for (const auto& ep : s.states) {
          sep.push_back(separable_solution(ep, s.H.grid, td, tg));
          prop.push_back(propagate_crank_nicolson(s.H, td, sep.back().slice(0), tg, sub).field);
        }
        for (std::size_t i = 0; i < sep.size(); ++i)
          for (std::size_t j = i + 1; j < sep.size(); ++j) {
            double m = 0.0;
            for (std::size_t it = 0; it < tg.size(); ++it) m = std::max(m, cross_orthogonality(sep[i], sep[j], it));
            const double p = cross_orthogonality(prop[i], prop[j], tg.size() - 1);
            worst_sep = std::max(worst_sep, m);
            worst_prop = std::max(worst_prop, p);
            t.row().cell(c.family).cell(kind).cell(s.name).cell(static_cast<long long>(i)).cell(static_cast<long long>(j)).cell(m).cell(p);
          }
      }
    }
  }
  t.write(dir / "c08_orthogonality.csv");
  return {worst_sep < 1e-10 && worst_prop < 1e-6, "separable max " + sci(worst_sep) + " over 50 t (tol 1e-10), propagated " +
                                                      sci(worst_prop) + " at T (tol 1e-6)"};
}

// ---- 9: non-unitarity witness ----
Outcome non_unitarity(const AcceptanceOptions& o, const fs::path& dir) {
  const double kappa = 0.5;
  const Warp w = make_analytic_warp("exp-rate", std::vector<double>{kappa});
  const TimeGrid g(-10.0, 10.0, o.n);
  const auto f = SampledSignal::sample(g, [](double x) { return cplx(std::exp(-x * x / 2.0)); });
  const TimeGrid ug = warped_u_grid(w, g, o.oversample * (o.n - 1) + 1);
  const auto F = warped_forward(f, w, conjugate_energy_grid(ug), {WarpedMethod::resample_fft, ug});
  const double nf = l2_norm(f.values, g.step());
  const double nF = l2_norm(F.values, F.grid.step());
  // ||F||^2 = int |f|^2 / g dt = sqrt(pi) e^{kappa^2 / 4}
  const double oracle = std::pow(kPi, 0.25) * std::exp(kappa * kappa / 8.0);
  csv::Table t({"quantity", "value"});
  t.row().cell("norm_f").cell(nf);
  t.row().cell("norm_F").cell(nF);
  t.row().cell("norm_F_oracle").cell(oracle);
  t.write(dir / "c09_non_unitarity.csv");
  return {std::abs(nF - nf) > 1e-3, "||F_h f|| = " + sci(nF) + " (oracle " + sci(oracle) + ") vs ||f|| = " + sci(nf) +
                                        ", gap " + sci(std::abs(nF - nf)) + " (must exceed 1e-3)"};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)(const AcceptanceOptions&, const fs::path&);
};

const Criterion kCriteria[] = {
    {1, "transform reduction identities", reduction_identities},
    {2, "resolution of unity", resolution_of_unity},
    {3, "bi-orthogonality (smeared delta)", biorthogonality},
    {4, "eigenrelations", eigenrelations},
    {5, "self-adjointness dichotomy", adjointness},
    {6, "distribution S(E)", distribution},
    {7, "Schrodinger closed forms", schrodinger_closed_forms},
    {8, "cross-orthogonality", cross_orthogonality_check},
    {9, "non-unitarity witness", non_unitarity},
};

std::vector<CriterionResult> run_battery(const AcceptanceOptions& o, const fs::path& dir, bool notify) {
  fs::create_directories(dir);
  std::vector<CriterionResult> out;
  csv::Table summary({"criterion", "name", "pass"});
  for (const auto& c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    try {
      const Outcome oc = c.run(o, dir);
      r.pass = oc.pass;
      r.detail = oc.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    summary.row().cell(static_cast<long long>(c.id)).cell(c.name).cell(r.pass ? "pass" : "fail");
    if (notify && o.on_result) o.on_result(r.id, r.name, r.pass, r.detail);
    out.push_back(std::move(r));
  }
  summary.write(dir / "summary.csv");
  return out;
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<fs::path> csv_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path().filename());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

bool AcceptanceResult::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

std::string format_criterion(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s  C%-2d ", r.pass ? "PASS" : "FAIL", r.id);
  return buf + r.name + ": " + r.detail;
}

AcceptanceResult run_acceptance(const AcceptanceOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  AcceptanceResult res;
  res.criteria = run_battery(opts, opts.out_dir, true);

  CriterionResult det;
  det.id = 10;
  det.name = "determinism";
  const auto d0 = std::chrono::steady_clock::now();
  if (opts.determinism) {
    const fs::path rerun = opts.out_dir / "rerun";
    fs::remove_all(rerun);
    run_battery(opts, rerun, false);
    const auto first = csv_files(opts.out_dir);
    const auto second = csv_files(rerun);
    std::size_t same = 0;
    std::string mismatch;
    for (const auto& f : first) {
      if (std::find(second.begin(), second.end(), f) != second.end() &&
          read_bytes(opts.out_dir / f) == read_bytes(rerun / f))
        ++same;
      else if (mismatch.empty())
        mismatch = f.string();
    }
    det.pass = !first.empty() && first.size() == second.size() && same == first.size();
    det.detail = std::to_string(same) + "/" + std::to_string(first.size()) + " CSV artifacts byte-identical on re-run" +
                 (mismatch.empty() ? "" : " (first mismatch: " + mismatch + ")");
    fs::remove_all(rerun);
  } else {
    det.pass = false;
    det.detail = "skipped";
  }
  det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - d0).count();
  if (opts.on_result) opts.on_result(det.id, det.name, det.pass, det.detail);
  res.criteria.push_back(det);

  res.report.set_inputs({{"seed", opts.seed}, {"n", opts.n}, {"oversample", opts.oversample}});
  for (const auto& c : res.criteria) {
    res.report.add_check("C" + std::to_string(c.id) + " " + c.name, c.detail, "see detail", c.pass);
    res.report.add_scalar("seconds.C" + std::to_string(c.id), c.seconds);
  }
  for (const auto& f : csv_files(opts.out_dir)) {
    res.artifacts.push_back(opts.out_dir / f);
    res.report.add_artifact((opts.out_dir / f).string());
  }
  res.report.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return res;
}

}  // namespace warpspec
