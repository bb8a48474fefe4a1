#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cxho/params.hpp"

namespace cxho::cli {

/// Raised for anything that maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a file cannot be read or written (exit status 1).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;

  cplx m{1.0, 0.0};
  cplx omega{1.0, 0.0};
  double hbar = 1.0;
  double eps = 1e-3;
  double eps_prime = 1e-3;

  int grid = 101;
  int nmax = 32;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int max_iters = 10000;

  double T = 10.0;
  double T_A = 0.0;
  double T_B = 1.0;
  int steps = 100;
  cplx lambda_a{0.0, 0.0};
  cplx lambda_b{0.0, 0.0};

  int n = 0;
  int basis = 1;
  std::string kind = "eigen";   // eigen | finite-eps | coherent
  cplx lambda{0.0, 0.0};
  double angle = 0.0;
  double q_max = 5.0;
  int points = 201;

  std::string output = "-";
  Format format = Format::Csv;
};

const std::vector<std::string>& commands();

/// Option names accepted by a command, both as --flags and as config-file keys.
const std::vector<std::string>& option_names(const std::string& command);

/// Merges defaults, the optional JSON config file and the flags (highest
/// priority). Flag values are the raw strings given on the command line.
RunConfig resolve_config(const std::string& command,
                         const std::map<std::string, std::string>& flags,
                         const std::optional<std::string>& config_path = std::nullopt);

/// Same, with the config file already read into a string.
RunConfig resolve_config_text(const std::string& command,
                              const std::map<std::string, std::string>& flags,
                              const std::string& config_json);

}  // namespace cxho::cli
