// warpspec <subcommand> --config <path> [--out <dir>] [--seed <n>]
#include <CLI11.hpp>
#include <iostream>

#include "warpspec/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Warped and modulated Fourier transforms, S(E) pairings and separable Schrodinger solutions"};
  app.require_subcommand(1);
  std::string config, out = ".";
  std::uint64_t seed = 0;
  const char* subs[][2] = {
      {"transform", "modulated and warped transforms: round trip and reduction checks"},
      {"verify-biorth", "bi-orthogonality: smeared delta, Dirichlet zeros"},
      {"distribution", "S(E) pairing: direct vs Parseval, regularized density"},
      {"evolve", "closed-form solution vs residual and Crank-Nicolson propagation"},
      {"orthogonality", "cross-orthogonality of separable and propagated solutions"},
      {"suite", "full acceptance battery"},
  };
  std::vector<CLI::App*> apps;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s[0], s[1]);
    sub->add_option("--config", config, "experiment config (TOML subset)")->required();
    sub->add_option("--out", out, "artifact directory");
    sub->add_option("--seed", seed, "RNG seed (overrides the config)");
    apps.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : warpspec::cli::kConfigError;
  }

  warpspec::cli::RunOptions opts;
  opts.config = config;
  opts.out_dir = out;
  std::string name;
  for (auto* sub : apps)
    if (sub->parsed()) {
      name = sub->get_name();
      if (sub->count("--seed") > 0) opts.seed = seed;
    }
  const auto res = warpspec::cli::run(name, opts, std::cout);
  if (res.exit_code == warpspec::cli::kPass) std::cout << res.message << '\n';
  else std::cerr << "warpspec " << name << ": " << res.message << '\n';
  return res.exit_code;
}
