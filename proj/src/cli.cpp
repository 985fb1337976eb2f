#include "warpspec/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "warpspec/acceptance.hpp"
#include "warpspec/convergence.hpp"
#include "warpspec/csv.hpp"
#include "warpspec/distributions.hpp"
#include "warpspec/schrodinger.hpp"
#include "warpspec/test_functions.hpp"
#include "warpspec/transforms.hpp"

namespace warpspec::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Tolerances named in the config; unknown names are rejected so every configured tolerance
// ends up attached to a check.
class Tolerances {
 public:
  Tolerances(const ConfigView& section, std::map<std::string, double> defaults) : values_(std::move(defaults)) {
    for (const auto& [k, v] : section.raw().items()) {
      if (!values_.contains(k)) {
        std::string known;
        for (const auto& [name, d] : values_) known += (known.empty() ? "" : ", ") + name;
        throw Error(ErrorCode::ConfigParseError, "unknown tolerance '" + k + "' (known: " + known + ")");
      }
      values_[k] = section.number(k);
    }
  }
  double operator[](const std::string& name) const { return values_.at(name); }

 private:
  std::map<std::string, double> values_;
};

ConfigView warp_node(const ConfigView& cfg, const std::string& key) {
  if (!cfg.has(key)) throw Error(ErrorCode::ConfigParseError, "missing '" + cfg.path(key) + "' specification");
  return cfg.section(key);
}

TimeGrid time_grid(const ConfigView& g, double lo, double hi, long long n) {
  const long long count = g.integer("n", n);
  if (count < 2) throw Error(ErrorCode::InvalidGrid, "grid n must be >= 2");
  return TimeGrid(g.number("t_min", lo), g.number("t_max", hi), static_cast<std::size_t>(count));
}

SampledSignal signal_from_config(const ConfigView& cfg, const fs::path& base, std::uint64_t seed) {
  const ConfigView s = cfg.section("signal");
  if (s.has("file")) {
    const auto rows = csv::read_numeric(base / s.string("file", ""));
    if (rows.size() < 2 || rows[0].size() < 2)
      throw Error(ErrorCode::ConfigParseError, "signal file needs columns t, re[, im] and at least 2 rows");
    const TimeGrid g(rows.front()[0], rows.back()[0], rows.size());
    std::vector<cplx> v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (std::abs(rows[i][0] - g[i]) > 1e-9 * (1.0 + std::abs(g[i])))
        throw Error(ErrorCode::InvalidGrid, "signal file samples are not uniform in t");
      v.emplace_back(rows[i][1], rows[i].size() > 2 ? rows[i][2] : 0.0);
    }
    return {g, std::move(v)};
  }
  const TimeGrid g = time_grid(cfg.section("grid"), -20.0, 20.0, 2048);
  return make_signal(s.string("kind", "gaussian"), s.numbers("params", {}), g, seed);
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string artifact(Report& r, const fs::path& out, const std::string& name) {
  const auto p = out / name;
  r.add_artifact(p.string());
  return p.string();
}

// ---- transform ----
void run_transform(const ConfigView& cfg, const fs::path& base, const fs::path& out, std::uint64_t seed, Report& r) {
  const Warp w = warp_from_config(warp_node(cfg, "warp"), base);
  const Tolerances tol(cfg.section("tolerances"), {{"roundtrip", 1e-7}, {"reduction", 1e-6}});
  const ConfigView tc = cfg.section("transform");
  const std::string which = tc.string("case", "both");
  if (which != "both" && which != "additive" && which != "multiplicative")
    throw Error(ErrorCode::ConfigParseError, "transform.case must be additive, multiplicative or both");
  const auto oversample = tc.integer("oversample", 1);
  if (oversample < 1) throw Error(ErrorCode::ConfigParseError, "transform.oversample must be >= 1");

  const SampledSignal f = signal_from_config(cfg, base, seed);
  const std::size_t n_u = static_cast<std::size_t>(oversample) * (f.grid.size() - 1) + 1;
  const auto t = f.grid.points();
  csv::write_complex_series(artifact(r, out, "signal.csv"), "t", t, f.values);

  if (which != "multiplicative") {
    const auto F = modulated_forward(f, w);
    const auto back = modulated_inverse(F, w, f.grid);
    csv::write_complex_series(artifact(r, out, "spectrum_additive.csv"), "E", F.grid.points(), F.values);
    csv::write_complex_series(artifact(r, out, "reconstructed_additive.csv"), "t", t, back.values);
    r.add_check("roundtrip", relative_l2_error(back.values, f.values), tol["roundtrip"]);
    r.add_check("reduction", modulated_reduction_check(f, w), tol["reduction"]);
    r.add_scalar("norm_ratio_additive", l2_norm(F.values, F.grid.step()) / l2_norm(f.values, f.grid.step()));
  }
  if (which != "additive") {
    if (!w.monotone()) throw Error(ErrorCode::NonMonotoneWarp, "the multiplicative case needs a monotone warp");
    const TimeGrid ug = warped_u_grid(w, f.grid, n_u);
    const WarpedMethod method = tc.string("method", "resample-fft") == "direct-quadrature"
                                    ? WarpedMethod::direct_quadrature
                                    : WarpedMethod::resample_fft;
    const auto F = warped_forward(f, w, conjugate_energy_grid(ug), {method, ug});
    const auto back = warped_inverse(F, w, f.grid);
    csv::write_complex_series(artifact(r, out, "spectrum_multiplicative.csv"), "E", F.grid.points(), F.values);
    csv::write_complex_series(artifact(r, out, "reconstructed_multiplicative.csv"), "t", t, back.values);
    const std::string suffix = which == "both" ? "_multiplicative" : "";
    r.add_check("roundtrip" + suffix, relative_l2_error(back.values, f.values), tol["roundtrip"]);
    r.add_check("reduction" + suffix, warped_reduction_check(f, w, n_u), tol["reduction"]);
    r.add_scalar("norm_ratio_multiplicative", l2_norm(F.values, F.grid.step()) / l2_norm(f.values, f.grid.step()));
  }
}

// ---- verify-biorth ----
void run_biorth(const ConfigView& cfg, const fs::path& base, const fs::path& out, Report& r) {
  const Warp w = warp_from_config(warp_node(cfg, "warp"), base);
  const Tolerances tol(cfg.section("tolerances"), {{"smeared", 1e-3}, {"dirichlet_zero", 1e-8}, {"delta_at_zero", 1e-8}});
  const ConfigView b = cfg.section("biorth");
  const double e0 = b.number("energy", 0.3);
  const double sigma = b.number("sigma", 0.1);
  const double center = b.number("center", 0.0);
  const auto widths = b.numbers("widths", {10.0, 20.0, 40.0, 80.0});
  const auto n = static_cast<std::size_t>(b.integer("n", 4001));
  if (widths.empty()) throw Error(ErrorCode::ConfigParseError, "biorth.widths must not be empty");

  const auto phi = [&](double e) { return std::exp(-(e - e0) * (e - e0) / (2.0 * sigma * sigma)); };
  const EnergyGrid eprime(e0 - 15.0 * sigma, e0 + 15.0 * sigma, 601);
  csv::Table t({"h_window", "re", "im", "error"});
  double prev = INFINITY, last = 0.0;
  bool monotone = true;
  for (double width : widths) {
    const TimeGrid tg = h_window_grid(w, width, n, center);
    const cplx v = smeared_biorth(e0, w, tg, eprime, phi);
    last = std::abs(v - phi(e0));
    monotone = monotone && last < prev;
    prev = last;
    t.row().cell(width).cell(v.real()).cell(v.imag()).cell(last);
  }
  t.write(artifact(r, out, "biorth.csv"));
  r.add_check("smeared", last, tol["smeared"]);
  r.add_check("smeared_monotone", monotone, "errors decrease with window width", monotone);

  const double width = widths.back();
  const TimeGrid tg = h_window_grid(w, width, n, center);
  csv::Table z({"k", "e_probe", "re", "im", "exact_re", "exact_im"});
  double worst_zero = 0.0;
  for (int k = -3; k <= 3; ++k) {
    const double ep = e0 + 2.0 * kPi * k / width;
    const cplx v = biorth_pairing(ep, e0, w, tg);
    const cplx ex = biorth_pairing_exact(ep, e0, w, tg);
    z.row().cell(static_cast<long long>(k)).cell(ep).cell(v.real()).cell(v.imag()).cell(ex.real()).cell(ex.imag());
    if (k == 0) r.add_check("delta_at_zero", std::abs(v - width / (2.0 * kPi)), tol["delta_at_zero"]);
    else worst_zero = std::max(worst_zero, std::abs(v));
  }
  z.write(artifact(r, out, "dirichlet.csv"));
  r.add_check("dirichlet_zero", worst_zero, tol["dirichlet_zero"]);
}

// ---- distribution ----
void run_distribution(const ConfigView& cfg, const fs::path& base, const fs::path& out, Report& r) {
  const Warp w = warp_from_config(warp_node(cfg, "warp"), base);
  const Tolerances tol(cfg.section("tolerances"), {{"agreement", 1e-4}, {"expected", 1e-6}, {"density", 1e-6}});
  const ConfigView tf = cfg.section("test_function");
  const TestFunction phi = TestFunction::parse(tf.string("kind", "gaussian"), tf.numbers("params", {}));
  const ConfigView d = cfg.section("distribution");
  std::optional<double> T;
  if (d.has("T")) T = d.number("T");

  // Parseval first: it rejects warps whose range misses the band of F phi before the
  // direct route starts doubling T.
  const cplx pars = s_pairing_parseval(w, phi, {T, static_cast<std::size_t>(d.integer("n_u_parseval", 16384))});
  cplx direct;
  double T_used;
  if (T) {
    direct = s_pairing_direct(w, phi, *T);
    T_used = *T;
  } else {
    const auto conv = s_pairing_direct_converged(w, phi, d.number("T0", 5.0), d.number("T_tol", 1e-5));
    if (!conv.converged) r.add_note("direct pairing did not settle within the T-doubling budget");
    direct = conv.value;
    T_used = conv.T_used;
  }
  r.add_scalar("direct", complex_json(direct));
  r.add_scalar("parseval", complex_json(pars));
  r.add_scalar("difference", std::abs(direct - pars));
  r.add_scalar("T_used", T_used);
  r.add_check("agreement", std::abs(direct - pars), tol["agreement"]);
  if (d.has("expected")) {
    const double e = d.number("expected");
    r.add_check("expected", std::max(std::abs(direct - e), std::abs(pars - e)), tol["expected"]);
  }

  const EnergyGrid eg(d.number("e_min", -10.0), d.number("e_max", 10.0), static_cast<std::size_t>(d.integer("n_e", 2001)));
  DensityOptions dopt;
  dopt.u_half_width = d.number("u_half_width", dopt.u_half_width);
  dopt.n_u = static_cast<std::size_t>(d.integer("n_u", static_cast<long long>(dopt.n_u)));
  dopt.taper_fraction = d.number("taper", dopt.taper_fraction);
  dopt.T = T;
  const auto S = s_density(w, eg, dopt);
  csv::write_complex_series(artifact(r, out, "density.csv"), "E", eg.points(), S.values);
  const cplx dens = pair_density(S, phi);
  r.add_scalar("density_pairing", complex_json(dens));
  if (cfg.section("tolerances").has("density")) r.add_check("density", std::abs(dens - pars), tol["density"]);
}

struct QuantumSetup {
  Hamiltonian1D H;
  TimeDependence td;
};

TimeDependence time_dependence(const ConfigView& h, const fs::path& base) {
  const std::string kind = h.string("kind", "multiplicative");
  const Warp w = warp_from_config(warp_node(h, "warp"), base);
  if (kind == "additive") return TimeDependence::additive(w);
  if (kind == "multiplicative") return TimeDependence::multiplicative(w);
  if (kind == "combined") return TimeDependence::combined(w, warp_from_config(warp_node(h, "warp2"), base));
  throw Error(ErrorCode::ConfigParseError, "hamiltonian.kind must be additive, multiplicative or combined");
}

QuantumSetup quantum_setup(const ConfigView& cfg, const fs::path& base) {
  const ConfigView s = cfg.section("space");
  const ConfigView p = cfg.section("potential");
  const std::string kind = p.string("kind", "harmonic");
  const SpaceGrid sg(s.number("q_min", kind == "box" ? 0.0 : -10.0), s.number("q_max", kind == "box" ? kPi : 10.0),
                     static_cast<std::size_t>(s.integer("n", 401)));
  PotentialSpec spec = PotentialSpec::parse(kind, p.numbers("params", {}));
  spec.shift = p.number("shift", 0.0);
  if (kind == "custom") {
    const auto rows = csv::read_numeric(base / p.string("file", ""));
    for (const auto& row : rows) spec.samples.push_back(row.back());
  }
  return {build_hamiltonian(sg, spec, p.number("mass", 1.0)), time_dependence(cfg.section("hamiltonian"), base)};
}

void write_field(const std::string& path, const SpaceTimeField& f) {
  csv::Table t({"q", "t", "re", "im"});
  for (std::size_t it = 0; it < f.tgrid.size(); ++it)
    for (std::size_t iq = 0; iq < f.sgrid.size(); ++iq) {
      const cplx z = f.at(iq, it);
      t.row().cell(f.sgrid[iq]).cell(f.tgrid[it]).cell(z.real()).cell(z.imag());
    }
  t.write(path);
}

// ---- evolve ----
void run_evolve(const ConfigView& cfg, const fs::path& base, const fs::path& out, Report& r) {
  const auto [H, td] = quantum_setup(cfg, base);
  const Tolerances tol(cfg.section("tolerances"),
                       {{"residual", 1e-6}, {"final_error", 1e-4}, {"slope", 0.2}, {"norm_drift", 1e-10}});
  const ConfigView e = cfg.section("evolution");
  const double T = e.number("T", 1.0);
  const double dt = e.number("dt", 1e-3);
  const auto state = static_cast<std::size_t>(e.integer("state", 1));
  const auto n_out = static_cast<std::size_t>(e.integer("n_out", 11));
  const auto states = eigensolve(H, state + 1);
  const EigenPair& ep = states[state];
  r.add_scalar("energy", ep.energy);

  const double res_dt = e.number("residual_dt", 1e-3);
  const TimeGrid fine(0.0, T, static_cast<std::size_t>(std::llround(T / res_dt)) + 1);
  r.add_check("residual", schrodinger_residual(separable_solution(ep, H.grid, td, fine), H, td), tol["residual"]);

  const TimeGrid tg(0.0, T, n_out);
  const auto exact = separable_solution(ep, H.grid, td, tg);
  const auto substeps = [&](double step) { return static_cast<std::size_t>(std::max(1LL, std::llround(tg.step() / step))); };
  const auto prop = propagate_crank_nicolson(H, td, exact.slice(0), tg, substeps(dt));
  write_field(artifact(r, out, "field.csv"), prop.field);
  r.add_check("final_error", slice_l2_distance(prop.field, exact, tg.size() - 1), tol["final_error"]);
  r.add_check("norm_drift", prop.max_step_norm_drift, tol["norm_drift"]);
  if (!prop.stability_ok) r.add_note("dt * ||H(t)|| >= 0.5 on some step: accuracy heuristic violated");

  const auto study = e.numbers("dt_study", {});
  if (!study.empty()) {
    std::vector<Report> runs;
    for (double s : study) {
      const auto p = propagate_crank_nicolson(H, td, exact.slice(0), tg, substeps(s));
      Report run("evolve");
      run.set_refinement("dt", tg.step() / static_cast<double>(substeps(s)));
      run.add_scalar("final_error", slice_l2_distance(p.field, exact, tg.size() - 1));
      runs.push_back(std::move(run));
    }
    const auto table = emit_convergence_table(runs, "final_error");
    csv::Table t({"dt", "final_error"});
    for (const auto& row : table.rows) t.row().cell(row.parameter).cell(row.error);
    t.write(artifact(r, out, "convergence.csv"));
    r.add_scalar("slope", table.slope);
    r.add_check("slope", std::abs(table.slope - 2.0), tol["slope"]);
  }
}

// ---- orthogonality ----
void run_orthogonality(const ConfigView& cfg, const fs::path& base, const fs::path& out, Report& r) {
  const auto [H, td] = quantum_setup(cfg, base);
  const Tolerances tol(cfg.section("tolerances"), {{"separable", 1e-10}, {"propagated", 1e-6}, {"self", 1e-12}});
  const ConfigView o = cfg.section("orthogonality");
  std::vector<std::size_t> idx;
  for (double s : o.numbers("states", {0, 1, 2, 3})) {
    if (s < 0 || s != std::floor(s)) throw Error(ErrorCode::ConfigParseError, "orthogonality.states must be indices");
    idx.push_back(static_cast<std::size_t>(s));
  }
  if (idx.size() < 2) throw Error(ErrorCode::ConfigParseError, "orthogonality.states needs at least two states");
  const auto all = eigensolve(H, *std::max_element(idx.begin(), idx.end()) + 1);
  const TimeGrid tg(0.0, o.number("T", 1.0), static_cast<std::size_t>(o.integer("n_t", 50)));
  const bool propagate = o.boolean("propagate", true);
  const auto sub = static_cast<std::size_t>(std::max(1.0, std::ceil(tg.step() / o.number("dt", 1e-3))));

  std::vector<SpaceTimeField> sep, prop;
  for (auto i : idx) {
    sep.push_back(separable_solution(all[i], H.grid, td, tg));
    if (propagate) prop.push_back(propagate_crank_nicolson(H, td, sep.back().slice(0), tg, sub).field);
  }
  csv::Table t({"t", "i", "j", "separable", "propagated"});
  double worst_sep = 0.0, worst_prop = 0.0;
  for (std::size_t it = 0; it < tg.size(); ++it)
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const double s = cross_orthogonality(sep[a], sep[b], it);
        const double p = propagate ? cross_orthogonality(prop[a], prop[b], it) : 0.0;
        worst_sep = std::max(worst_sep, s);
        worst_prop = std::max(worst_prop, p);
        t.row().cell(tg[it]).cell(static_cast<long long>(idx[a])).cell(static_cast<long long>(idx[b])).cell(s).cell(p);
      }
  t.write(artifact(r, out, "orthogonality.csv"));
  r.add_check("separable", worst_sep, tol["separable"]);
  if (propagate) r.add_check("propagated", worst_prop, tol["propagated"]);
  r.add_check("self", std::abs(cross_orthogonality(sep[0], sep[0], tg.size() - 1) - 1.0 / (2.0 * kPi)), tol["self"]);
}

// ---- suite ----
void run_suite(const ConfigView& cfg, const fs::path& out, std::uint64_t seed, Report& r, std::ostream& log) {
  const ConfigView s = cfg.section("suite");
  Tolerances(cfg.section("tolerances"), {});
  AcceptanceOptions opts;
  opts.seed = seed;
  opts.out_dir = out;
  opts.n = static_cast<std::size_t>(s.integer("n", 4096));
  opts.oversample = static_cast<std::size_t>(s.integer("oversample", 8));
  opts.determinism = s.boolean("determinism", true);
  opts.on_result = [&log](int id, const std::string& name, bool pass, const std::string& detail) {
    log << format_criterion({id, name, pass, detail}) << std::endl;
  };
  const auto res = run_acceptance(opts);
  for (const auto& c : res.criteria) {
    r.add_check("C" + std::to_string(c.id) + " " + c.name, c.detail, "see acceptance criteria", c.pass);
    r.add_scalar("seconds.C" + std::to_string(c.id), c.seconds);
  }
  for (const auto& a : res.artifacts) r.add_artifact(a.string());
  log << "\n criterion  verdict  seconds\n";
  for (const auto& c : res.criteria) {
    char line[64];
    std::snprintf(line, sizeof line, " C%-8d  %-7s  %7.2f\n", c.id, c.pass ? "pass" : "FAIL", c.seconds);
    log << line;
  }
}

std::uint64_t seed_from(const ConfigView& cfg, const RunOptions& opts) {
  if (opts.seed) return *opts.seed;
  const long long s = cfg.integer("seed", cfg.section("suite").integer("seed", 0));
  if (s < 0) throw Error(ErrorCode::ConfigParseError, "seed must be non-negative");
  return static_cast<std::uint64_t>(s);
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigParseError:
    case ErrorCode::UnknownFamily:
    case ErrorCode::NonMonotoneParameters:
    case ErrorCode::InvalidGrid:
    case ErrorCode::BadPotential:
    case ErrorCode::NonPositiveG:
    case ErrorCode::NonMonotoneWarp:
      return kConfigError;
    default:
      return kNumericFailure;
  }
}

Warp warp_from_config(const ConfigView& node, const fs::path& base) {
  if (node.has("file")) {
    const auto rows = csv::read_numeric(base / node.string("file", ""));
    if (rows.size() < 5 || rows[0].size() < 2)
      throw Error(ErrorCode::ConfigParseError, "warp file needs columns t, g and at least 5 rows");
    const TimeGrid g(rows.front()[0], rows.back()[0], rows.size());
    std::vector<double> gs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (std::abs(rows[i][0] - g[i]) > 1e-9 * (1.0 + std::abs(g[i])))
        throw Error(ErrorCode::InvalidGrid, "warp file samples are not uniform in t");
      gs.push_back(rows[i][1]);
    }
    return make_numeric_warp(g, gs, node.number("t0", 0.0), node.number("c0", 0.0));
  }
  const std::string family = node.string("family", "");
  if (family.empty()) throw Error(ErrorCode::ConfigParseError, "'" + node.path("family") + "' or 'file' is required");
  return make_analytic_warp(family, node.numbers("params", {}), {node.number("t0", 0.0), node.number("c0", 0.0)});
}

RunResult run(const std::string& subcommand, const RunOptions& opts, std::ostream& log) {
  static const std::set<std::string> known{"transform", "verify-biorth", "distribution", "evolve", "orthogonality", "suite"};
  RunResult res;
  res.report = Report(subcommand);
  const auto t0 = std::chrono::steady_clock::now();
  const auto finish = [&](int code, const std::string& msg) {
    res.exit_code = code;
    res.message = msg;
    res.report.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    try {
      fs::create_directories(opts.out_dir);
      res.report.write((opts.out_dir / "report.json").string());
    } catch (const std::exception& e) {
      log << "warning: " << e.what() << '\n';
    }
    return res;
  };

  json cfg_json;
  try {
    if (!known.contains(subcommand)) throw Error(ErrorCode::ConfigParseError, "unknown subcommand '" + subcommand + "'");
    cfg_json = load_config(opts.config);
  } catch (const Error& e) {
    res.report.add_note(std::string(e.what()));
    return finish(kConfigError, std::string(e.what()));
  }
  res.report.set_inputs(cfg_json);

  const ConfigView cfg(cfg_json);
  const fs::path base = opts.config.has_parent_path() ? opts.config.parent_path() : fs::path(".");
  try {
    fs::create_directories(opts.out_dir);
    const std::uint64_t seed = seed_from(cfg, opts);
    res.report.add_scalar("seed", json(seed));
    if (subcommand == "transform") run_transform(cfg, base, opts.out_dir, seed, res.report);
    else if (subcommand == "verify-biorth") run_biorth(cfg, base, opts.out_dir, res.report);
    else if (subcommand == "distribution") run_distribution(cfg, base, opts.out_dir, res.report);
    else if (subcommand == "evolve") run_evolve(cfg, base, opts.out_dir, res.report);
    else if (subcommand == "orthogonality") run_orthogonality(cfg, base, opts.out_dir, res.report);
    else run_suite(cfg, opts.out_dir, seed, res.report, log);
  } catch (const Error& e) {
    const std::string msg = std::string(e.what());
    res.report.add_note(msg);
    return finish(exit_code_for(e.code()), msg);
  } catch (const fs::filesystem_error& e) {
    res.report.add_note(e.what());
    return finish(kConfigError, e.what());
  } catch (const std::exception& e) {
    res.report.add_note(e.what());
    return finish(kNumericFailure, e.what());
  }

  if (subcommand != "suite") {
    for (const auto& c : res.report.checks()) {
      char line[160];
      const auto& v = c["value"];
      const std::string value = v.is_number() ? csv::format(v.get<double>()) : v.dump();
      std::snprintf(line, sizeof line, "%-5s %-26s %s", c["pass"].get<bool>() ? "pass" : "FAIL",
                    c["name"].get<std::string>().c_str(), value.c_str());
      log << line << '\n';
    }
  }
  const bool ok = res.report.all_pass();
  return finish(ok ? kPass : kCheckFailed, ok ? "all checks passed" : "some checks failed");
}

}  // namespace warpspec::cli
