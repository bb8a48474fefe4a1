#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cxho/cli/commands.hpp"
#include "cxho/cli/config.hpp"

namespace {

const std::map<std::string, std::string>& help_text() {
  static const std::map<std::string, std::string> h = {
      {"m", "complex mass, e.g. 1+0i"},
      {"omega", "complex angular frequency, e.g. 1-0.2i"},
      {"hbar", "reduced Planck constant (default 1)"},
      {"eps", "regulator eps (default 1e-3)"},
      {"eps-prime", "regulator eps' (default 1e-3)"},
      {"grid", "grid resolution per axis (default 101)"},
      {"nmax", "Fock truncation N (default 32)"},
      {"tol", "tolerance (default 1e-10)"},
      {"seed", "random seed (default 0)"},
      {"max-iters", "iteration cap (default 10000)"},
      {"T", "T_B - T_A (default 10)"},
      {"T-A", "initial time (default 0)"},
      {"T-B", "final time (default 1)"},
      {"steps", "number of time intervals (default 100)"},
      {"lambda-a", "coherent label of the initial state"},
      {"lambda-b", "coherent label of the final state"},
      {"n", "level index (default 0)"},
      {"basis", "1 or 2 (default 1)"},
      {"kind", "eigen | finite-eps | coherent (default eigen)"},
      {"lambda", "coherent label for --kind coherent"},
      {"angle", "ray angle in the complex q plane (default 0)"},
      {"q-max", "ray half-length (default 5)"},
      {"points", "number of samples along the ray (default 201)"},
      {"output", "output path, - for stdout (default -)"},
      {"format", "csv | json"},
  };
  return h;
}

struct Sub {
  CLI::App* app;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> opts;
  std::string config;
  CLI::Option* config_opt = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-action harmonic oscillator toolkit"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> about = {
      {"phase-diagram", "classify a grid over (theta_m, theta_omega)"},
      {"verify", "run the numerical property checks at one parameter point"},
      {"evolve", "weak values between evolving coherent states"},
      {"maximize", "maximize |<B|A>| over boundary states"},
      {"wavefunction", "sample a wavefunction along a ray in the complex q plane"},
  };
  std::map<std::string, Sub> subs;
  for (const auto& cmd : cxho::cli::commands()) {
    Sub& s = subs[cmd];
    s.app = app.add_subcommand(cmd, about.at(cmd));
    for (const auto& name : cxho::cli::option_names(cmd)) {
      s.opts[name] = s.app->add_option("--" + name, s.values[name], help_text().at(name));
    }
    s.config_opt = s.app->add_option("--config", s.config, "JSON file with option values");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cxho::cli::kConfigError;
  }

  for (auto& [cmd, s] : subs) {
    if (!s.app->parsed()) continue;
    std::map<std::string, std::string> flags;
    for (const auto& [name, opt] : s.opts)
      if (opt->count() > 0) flags[name] = s.values[name];
    std::optional<std::string> cfg;
    if (s.config_opt->count() > 0) cfg = s.config;
    try {
      const auto config = cxho::cli::resolve_config(cmd, flags, cfg);
      return cxho::cli::run_command(config, std::cout, std::cerr);
    } catch (const cxho::cli::IoError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cxho::cli::kIoError;
    } catch (const cxho::cli::ConfigError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cxho::cli::kConfigError;
    }
  }
  return cxho::cli::kConfigError;
}
