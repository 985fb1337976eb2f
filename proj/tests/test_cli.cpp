#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "support.hpp"
#include "warpspec/cli.hpp"
#include "warpspec/config.hpp"
#include "warpspec/convergence.hpp"
#include "warpspec/csv.hpp"
#include "warpspec/report.hpp"

using namespace warpspec;
namespace fs = std::filesystem;

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

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(WARPSPEC_TEST_SCRATCH) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cli::RunResult run_text(const std::string& sub, const std::string& config, const std::string& tag) {
  const fs::path dir = scratch(tag);
  std::ostringstream log;
  return cli::run(sub, {write_file(dir / "config.toml", config), dir / "out", std::nullopt}, log);
}

const char* kTransformIdentity = R"(
warp = { family = "identity", params = [] }
[signal]
kind = "gaussian"
params = [1.0, 0.0]
[grid]
t_min = -20.0
t_max = 20.0
n = 2048
[tolerances]
roundtrip = 1e-10
reduction = 1e-6
)";

}  // namespace

// ---- config ----

TEST_CASE("config parser handles sections, arrays and inline tables") {
  const auto j = parse_config_text(R"(
# comment
name = "demo"  # trailing comment
flag = true
[grid]
n = 2048
t_min = -2.5e1
list = [1, 2,
        3.5]
[hamiltonian.extra]
warp = { family = "chirp", params = [1.0, 0.02], t0 = 0 }
)");
  CHECK(j["name"] == "demo");
  CHECK(j["flag"] == true);
  CHECK(j["grid"]["n"] == 2048);
  CHECK(j["grid"]["t_min"].get<double>() == -25.0);
  CHECK(j["grid"]["list"].size() == 3);
  CHECK(j["hamiltonian"]["extra"]["warp"]["family"] == "chirp");
  const ConfigView v(j);
  CHECK(v.section("grid").number("t_min") == -25.0);
  CHECK(v.section("grid").integer("missing", 7) == 7);
  CHECK(v.section("grid").numbers("list", {}) == std::vector<double>{1.0, 2.0, 3.5});
}

TEST_CASE("config parser errors") {
  CHECK(code_of([] { parse_config_text("a = [1, 2\n"); }) == ErrorCode::ConfigParseError);
  CHECK(code_of([] { parse_config_text("a = 1\na = 2\n"); }) == ErrorCode::ConfigParseError);
  CHECK(code_of([] { parse_config_text("[sec\n"); }) == ErrorCode::ConfigParseError);
  CHECK(code_of([] { parse_config_text("novalue\n"); }) == ErrorCode::ConfigParseError);
  try {
    parse_config_text("ok = 1\n\nbad = \"unterminated\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  const auto j = parse_config_text("x = \"text\"\n");
  CHECK(code_of([&] { ConfigView(j).number("x"); }) == ErrorCode::ConfigParseError);
  CHECK(code_of([] { load_config("/nonexistent/config.toml"); }) == ErrorCode::ConfigParseError);
}

// ---- csv ----

TEST_CASE("csv round trip at full precision") {
  const fs::path dir = scratch("csv");
  const std::vector<double> x = {0.1, 1.0 / 3.0, -2e-300};
  const std::vector<cplx> v = {{1.0, -1.0}, {kPi, 0.0}, {0.0, 1e10}};
  csv::write_complex_series(dir / "s.csv", "E", x, v);
  CHECK(slurp(dir / "s.csv").rfind("E,re,im\n", 0) == 0);
  const auto rows = csv::read_numeric(dir / "s.csv");
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i][0] == x[i]);
    CHECK(rows[i][1] == v[i].real());
    CHECK(rows[i][2] == v[i].imag());
  }
  write_file(dir / "ragged.csv", "1,2\n3\n");
  CHECK(code_of([&] { csv::read_numeric(dir / "ragged.csv"); }) == ErrorCode::ConfigParseError);
}

// ---- report ----

TEST_CASE("report records checks and verdicts") {
  Report r("transform");
  CHECK(r.add_check("small", 1e-9, 1e-6));
  CHECK_FALSE(r.add_check("big", 1.0, 1e-6));
  CHECK(r.add_check("gap", 0.1, 1e-3, Comparison::greater));
  CHECK_FALSE(r.all_pass());
  const auto j = r.to_json();
  CHECK(j["schema_version"] == Report::kSchemaVersion);
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][1]["pass"] == false);
}

// ---- convergence tables ----

TEST_CASE("convergence slopes") {
  std::vector<ConvergenceRow> quad, quart;
  for (double dt : {1.6e-3, 8e-4, 4e-4, 2e-4, 1e-4}) {
    quad.push_back({dt, 3.0 * dt * dt});
    quart.push_back({dt, 0.5 * std::pow(dt, 4)});
  }
  CHECK(convergence_table("dt", "final_error", quad).slope == doctest::Approx(2.0).epsilon(1e-10));
  const auto t = convergence_table("dt", "residual", quart);
  CHECK(t.slope == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(t.csv().find("# slope,") != std::string::npos);
}

TEST_CASE("convergence table from reports") {
  std::vector<Report> runs;
  for (double dt : {4e-4, 2e-4, 1e-4}) {
    Report r("evolve");
    r.set_refinement("dt", dt);
    r.add_scalar("final_error", 7.0 * dt * dt);
    runs.push_back(r);
  }
  CHECK(emit_convergence_table(runs, "final_error").slope == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(code_of([&] { emit_convergence_table(runs, "missing"); }) == ErrorCode::InsufficientRuns);
}

TEST_CASE("degenerate convergence input") {
  CHECK(code_of([] { convergence_table("dt", "e", {{1e-3, 1.0}, {1e-3, 1.0}, {1e-3, 1.0}}); }) ==
        ErrorCode::InsufficientRuns);
  CHECK(code_of([] { convergence_table("dt", "e", {{1e-3, 1.0}, {2e-3, 2.0}}); }) == ErrorCode::InsufficientRuns);
  CHECK(code_of([] { convergence_table("dt", "e", {{1e-3, 0.0}, {2e-3, 1.0}, {4e-3, 2.0}}); }) ==
        ErrorCode::InsufficientRuns);
}

// ---- cli ----

TEST_CASE("exit code mapping") {
  CHECK(cli::exit_code_for(ErrorCode::ConfigParseError) == cli::kConfigError);
  CHECK(cli::exit_code_for(ErrorCode::UnknownFamily) == cli::kConfigError);
  CHECK(cli::exit_code_for(ErrorCode::NonMonotoneParameters) == cli::kConfigError);
  CHECK(cli::exit_code_for(ErrorCode::NyquistViolation) == cli::kNumericFailure);
  CHECK(cli::exit_code_for(ErrorCode::ConvergenceFailure) == cli::kNumericFailure);
}

TEST_CASE("transform with identity warp passes and reports every tolerance") {
  const auto r = run_text("transform", kTransformIdentity, "transform");
  CHECK(r.exit_code == cli::kPass);
  std::map<std::string, nlohmann::json> named;
  const auto report = r.report.to_json();
  for (const auto& c : report["checks"]) named[c["name"].get<std::string>()] = c;
  for (const char* name : {"roundtrip", "reduction", "roundtrip_multiplicative", "reduction_multiplicative"}) {
    INFO(std::string(name));
    REQUIRE(named.count(name));
    CHECK(named[name]["pass"] == true);
  }
  CHECK(named["roundtrip"]["value"].get<double>() < 1e-10);
  CHECK(named["roundtrip_multiplicative"]["value"].get<double>() < 1e-10);
  CHECK(fs::exists(fs::path(WARPSPEC_TEST_SCRATCH) / "transform/out/report.json"));
}

TEST_CASE("a failing check exits 1 and still writes the report") {
  std::string cfg = kTransformIdentity;
  cfg.replace(cfg.find("roundtrip = 1e-10"), 17, "roundtrip = 1e-30");
  const auto r = run_text("transform", cfg, "transform_fail");
  CHECK(r.exit_code == cli::kCheckFailed);
  CHECK(fs::exists(fs::path(WARPSPEC_TEST_SCRATCH) / "transform_fail/out/report.json"));
}

TEST_CASE("transform artifacts are byte-identical across runs") {
  const auto a = run_text("transform", kTransformIdentity, "det_a");
  const auto b = run_text("transform", kTransformIdentity, "det_b");
  REQUIRE(a.exit_code == cli::kPass);
  REQUIRE(b.exit_code == cli::kPass);
  int compared = 0;
  for (const auto& e : fs::directory_iterator(fs::path(WARPSPEC_TEST_SCRATCH) / "det_a/out")) {
    if (e.path().extension() != ".csv") continue;
    CHECK(slurp(e.path()) == slurp(fs::path(WARPSPEC_TEST_SCRATCH) / "det_b/out" / e.path().filename()));
    ++compared;
  }
  CHECK(compared > 0);
}

TEST_CASE("distribution with linear-scale warp gives one half") {
  const auto r = run_text("distribution", R"(
warp = { family = "linear-scale", params = [2.0] }
[test_function]
kind = "gaussian"
params = [1.0]
[distribution]
expected = 0.5
[tolerances]
agreement = 1e-6
expected = 1e-6
)",
                          "distribution");
  CHECK(r.exit_code == cli::kPass);
  const auto report = r.report.to_json();
  const auto& s = report["scalars"];
  CHECK(std::abs(s["direct"]["re"].get<double>() - 0.5) < 1e-6);
  CHECK(std::abs(s["parseval"]["re"].get<double>() - 0.5) < 1e-6);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run_text("transform", "warp = { family = \"cubic\" }\n", "unknown").exit_code == cli::kConfigError);
  CHECK(run_text("transform", "warp = { family = \"sin-perturbed\", params = [2.0, 1.0] }\n", "nonmono").exit_code ==
        cli::kConfigError);
  CHECK(run_text("transform", "warp = [1, 2\n", "syntax").exit_code == cli::kConfigError);
  std::string cfg = kTransformIdentity;
  cfg += "bogus = 1e-3\n";
  CHECK(run_text("transform", cfg, "bogus_tol").exit_code == cli::kConfigError);
  CHECK(run_text("frobnicate", kTransformIdentity, "bad_sub").exit_code == cli::kConfigError);
  std::ostringstream log;
  CHECK(cli::run("transform", {"/nonexistent.toml", scratch("missing"), std::nullopt}, log).exit_code ==
        cli::kConfigError);
}

TEST_CASE("numeric failures exit 3") {
  const auto r = run_text("distribution", R"(
warp = { family = "exp-rate", params = [0.5] }
[test_function]
kind = "gaussian"
)",
                          "range");
  CHECK(r.exit_code == cli::kNumericFailure);
  CHECK(r.message.find("RangeTooNarrow") != std::string::npos);
}

TEST_CASE("warp read from a t,g CSV file") {
  const fs::path dir = scratch("warpfile");
  std::ostringstream csv;
  csv << "t,g\n";
  for (int i = 0; i <= 2000; ++i) {
    const double t = -10.0 + 0.01 * i;
    csv << csv::format(t) << "," << csv::format(1.0 + 0.3 * std::cos(t)) << "\n";
  }
  write_file(dir / "g.csv", csv.str());
  const auto j = parse_config_text("warp = { file = \"g.csv\" }\n");
  const Warp w = cli::warp_from_config(ConfigView(j).section("warp"), dir);
  for (double t = -9.0; t <= 9.0; t += 0.7) CHECK(std::abs(w.h(t) - (t + 0.3 * std::sin(t))) < 1e-9);
}

TEST_CASE("bundled example configs pass") {
  const fs::path cfgs = WARPSPEC_CONFIG_DIR;
  const std::pair<const char*, const char*> cases[] = {
      {"transform", "transform_identity.toml"},     {"transform", "transform_exp_rate.toml"},
      {"verify-biorth", "biorth_sin.toml"},         {"distribution", "distribution_linear.toml"},
      {"distribution", "distribution_exp_rate.toml"}, {"evolve", "evolve_box_sin.toml"},
      {"orthogonality", "orthogonality_harmonic.toml"},
  };
  for (const auto& [sub, file] : cases) {
    std::ostringstream log;
    const auto r = cli::run(sub, {cfgs / file, scratch(std::string("cfg_") + file), std::nullopt}, log);
    INFO(file, ": ", r.message, "\n", log.str());
    CHECK(r.exit_code == cli::kPass);
  }
}
