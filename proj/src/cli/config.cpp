#include "cxho/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cxho/cli/complex_literal.hpp"

namespace cxho::cli {

namespace {

const std::map<std::string, std::vector<std::string>>& table() {
  static const std::vector<std::string> model = {"m", "omega", "hbar", "eps", "eps-prime"};
  static const std::vector<std::string> io = {"output", "format"};
  auto join = [](std::initializer_list<std::vector<std::string>> parts) {
    std::vector<std::string> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  static const std::map<std::string, std::vector<std::string>> t = {
      {"phase-diagram", join({{"grid"}, io})},
      {"verify", join({model, {"nmax", "tol", "T", "seed"}, io})},
      {"evolve", join({model, {"nmax", "lambda-a", "lambda-b", "T-A", "T-B", "steps"}, io})},
      {"maximize", join({model, {"nmax", "T", "tol", "seed", "max-iters"}, io})},
      {"wavefunction",
       join({model, {"n", "basis", "kind", "lambda", "angle", "q-max", "points"}, io})},
  };
  return t;
}

Format default_format(const std::string& command) {
  return command == "verify" || command == "maximize" ? Format::Json : Format::Csv;
}

int to_int(const std::string& key, const std::string& v) {
  const long long x = parse_int(v);
  if (x < INT32_MIN || x > INT32_MAX) throw std::invalid_argument("--" + key + " out of range");
  return static_cast<int>(x);
}

void apply(RunConfig& c, const std::string& key, const std::string& v) {
  try {
    if (key == "m") c.m = parse_complex(v);
    else if (key == "omega") c.omega = parse_complex(v);
    else if (key == "hbar") c.hbar = parse_real(v);
    else if (key == "eps") c.eps = parse_real(v);
    else if (key == "eps-prime") c.eps_prime = parse_real(v);
    else if (key == "grid") c.grid = to_int(key, v);
    else if (key == "nmax") c.nmax = to_int(key, v);
    else if (key == "tol") c.tol = parse_real(v);
    else if (key == "seed") {
      const long long s = parse_int(v);
      if (s < 0) throw std::invalid_argument("seed must be non-negative");
      c.seed = static_cast<std::uint64_t>(s);
    } else if (key == "max-iters") c.max_iters = to_int(key, v);
    else if (key == "T") c.T = parse_real(v);
    else if (key == "T-A") c.T_A = parse_real(v);
    else if (key == "T-B") c.T_B = parse_real(v);
    else if (key == "steps") c.steps = to_int(key, v);
    else if (key == "lambda-a") c.lambda_a = parse_complex(v);
    else if (key == "lambda-b") c.lambda_b = parse_complex(v);
    else if (key == "n") c.n = to_int(key, v);
    else if (key == "basis") c.basis = to_int(key, v);
    else if (key == "kind") c.kind = v;
    else if (key == "lambda") c.lambda = parse_complex(v);
    else if (key == "angle") c.angle = parse_real(v);
    else if (key == "q-max") c.q_max = parse_real(v);
    else if (key == "points") c.points = to_int(key, v);
    else if (key == "output") c.output = v;
    else if (key == "format") {
      if (v == "csv") c.format = Format::Csv;
      else if (v == "json") c.format = Format::Json;
      else throw std::invalid_argument("format must be csv or json");
    } else {
      throw std::invalid_argument("unknown option");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--" + key + " " + v + ": " + e.what());
  }
}

void check_ranges(const RunConfig& c) {
  auto need = [](bool ok, const char* msg) {
    if (!ok) throw ConfigError(msg);
  };
  need(c.grid >= 2, "--grid must be >= 2");
  need(c.nmax >= 2, "--nmax must be >= 2");
  need(c.tol > 0, "--tol must be positive");
  need(c.max_iters >= 1, "--max-iters must be >= 1");
  need(c.steps >= 1, "--steps must be >= 1");
  need(c.n >= 0, "--n must be >= 0");
  need(c.basis == 1 || c.basis == 2, "--basis must be 1 or 2");
  need(c.kind == "eigen" || c.kind == "finite-eps" || c.kind == "coherent",
       "--kind must be eigen, finite-eps or coherent");
  need(c.points >= 1, "--points must be >= 1");
  need(c.q_max > 0, "--q-max must be positive");
}

std::string scalar_to_string(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) return format_real(v.get<double>());
  throw ConfigError("config key '" + key + "' must be a string or number");
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"phase-diagram", "verify", "evolve", "maximize",
                                             "wavefunction"};
  return c;
}

const std::vector<std::string>& option_names(const std::string& command) {
  const auto it = table().find(command);
  if (it == table().end()) throw ConfigError("unknown command '" + command + "'");
  return it->second;
}

RunConfig resolve_config_text(const std::string& command,
                              const std::map<std::string, std::string>& flags,
                              const std::string& config_json) {
  const auto& allowed = option_names(command);
  auto known = [&](const std::string& k) {
    return std::find(allowed.begin(), allowed.end(), k) != allowed.end();
  };

  std::map<std::string, std::string> merged;
  if (!config_json.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    for (const auto& [k, v] : j.items()) {
      if (k == "command") {
        if (!v.is_string() || v.get<std::string>() != command)
          throw ConfigError("config file is for a different command");
        continue;
      }
      if (!known(k)) throw ConfigError("unknown config key '" + k + "' for " + command);
      merged[k] = scalar_to_string(k, v);
    }
  }
  for (const auto& [k, v] : flags) {
    if (!known(k)) throw ConfigError("unknown option --" + k + " for " + command);
    merged[k] = v;
  }

  RunConfig c;
  c.command = command;
  c.format = default_format(command);
  for (const auto& [k, v] : merged) apply(c, k, v);
  check_ranges(c);
  return c;
}

RunConfig resolve_config(const std::string& command,
                         const std::map<std::string, std::string>& flags,
                         const std::optional<std::string>& config_path) {
  std::string text;
  if (config_path) {
    std::ifstream in(*config_path, std::ios::binary);
    if (!in) throw IoError("cannot read config file '" + *config_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    if (text.empty()) throw ConfigError("config file '" + *config_path + "' is empty");
  }
  return resolve_config_text(command, flags, text);
}

}  // namespace cxho::cli
