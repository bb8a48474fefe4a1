#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cxho/cli/config.hpp"
#include "cxho/cli/json_writer.hpp"

namespace cxho::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kConfigError = 2, kVerifyFailed = 3 };

struct VerifyCheck {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool skipped = false;
  std::string note;
};

struct VerifyOptions {
  int nmax = 32;
  double tol = 1e-10;
  double T = 10.0;
  std::uint64_t seed = 0;
};

/// Runs the property suite of the fock, position, dynamics, maxprin and cfx
/// modules at one parameter point. Defect checks use min(own bound, tol).
std::vector<VerifyCheck> run_verify(const ModelParams& params, const VerifyOptions& opts);

struct CommandOutput {
  std::string text;
  int exit_code = kOk;
};

/// Produces the output document. Library errors propagate as cxho::Error,
/// configuration problems as ConfigError.
CommandOutput execute(const RunConfig& config);

/// execute() plus writing the result to config.output ("-" is stdout) and
/// mapping every failure to an exit status. Messages go to err.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cxho::cli
