#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wds/config.hpp"

namespace wds::app {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kConfigError = 2,
  kNumericalCap = 3,
  kSolverFailure = 4,
};

using Json = nlohmann::ordered_json;

/// Command-line overrides of the config file.
struct Overrides {
  std::string config;
  std::optional<std::size_t> grid;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> tolerance;
  std::optional<std::string> function;
  std::optional<std::string> set;
  std::optional<std::string> points;
};

/// Loads the config (defaults when no path) and applies overrides.
/// Throws ConfigError.
Scenario resolve(const Overrides& o);

struct Output {
  int code = kOk;
  std::string text;
};

/// 15 significant digits; "inf", "-inf" and "nan" spelled out.
std::string format_number(double v);

Output cmd_eval(const Scenario& s, const std::string& what);
Output cmd_dirichlet(const Scenario& s);

struct CapacityArgs {
  int levels = 12;
  std::optional<double> t;
  std::string source = "variational";
  bool condition_c = false;
};
Output cmd_capacity(const Scenario& s, const CapacityArgs& a);

struct CyclicityArgs {
  std::string mode = "distance";
  int degree = 64;
  int levels = 12;
  double alpha = 0.5;
  double gamma = 1.0;
};
Output cmd_cyclicity(const Scenario& s, const CyclicityArgs& a);

/// Route values on N = 256, 512, ..., grid.
Output cmd_sweep(const Scenario& s);

struct Check {
  std::string name;
  bool passed = true;
  Json detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  std::size_t passed() const;
  std::size_t failed() const;
  Json to_json() const;
};

SuiteResult suite_bregman(const Scenario& s);
SuiteResult suite_cutoff(const Scenario& s);
SuiteResult suite_routes(const Scenario& s);
SuiteResult suite_capacity(const Scenario& s);
SuiteResult suite_cyclicity(const Scenario& s);

inline const std::vector<std::string> kSuites = {"cutoff", "bregman", "routes", "capacity",
                                                 "cyclicity", "all"};

/// JSON run report; exit 1 iff any check fails.
Output cmd_verify(const Scenario& s, const std::string& suite, const std::string& echo,
                  const std::string& config_text);

}  // namespace wds::app
