#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "app.hpp"
#include "wds/parallel.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path.empty()) return "";
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace wds::app;
  CLI::App cli{"Weighted Dirichlet space numerics"};
  cli.require_subcommand(1);

  Overrides o;
  std::string out_path;
  std::optional<std::size_t> workers;
  cli.add_option("--config", o.config, "Plain-text config file");
  cli.add_option("--out", out_path, "Write output here instead of stdout");
  cli.add_option("--grid", o.grid, "Boundary grid size N (power of two)");
  cli.add_option("--seed", o.seed, "Random seed");
  cli.add_option("--trials", o.trials, "Trial count for verify suites");
  cli.add_option("--workers", workers, "Worker pool size");
  cli.add_option("--tolerance", o.tolerance, "Route agreement tolerance");
  cli.add_option("--function", o.function, "Function spec");
  cli.add_option("--set", o.set, "Boundary set spec");
  cli.add_option("--points", o.points, "Evaluation points \"re im; re im\"");

  std::string what;
  auto* eval = cli.add_subcommand("eval", "Evaluate a potential or kernel at points");
  eval->add_option("what", what, "green|poisson|vmu|psimu|balayage|amu|kernel")->required();

  auto* dir = cli.add_subcommand("dirichlet", "Dirichlet integral by every route");

  CapacityArgs cap;
  auto* capc = cli.add_subcommand("capacity", "Capacity of E_t over a dyadic sweep");
  capc->add_option("--levels", cap.levels, "Dyadic levels");
  capc->add_option("--t", cap.t, "Single neighborhood radius");
  capc->add_option("--source", cap.source, "variational|arc");
  capc->add_flag("--condition-c", cap.condition_c, "Append condition-C partial sums");

  CyclicityArgs cyc;
  auto* cycc = cli.add_subcommand("cyclicity", "Cyclicity diagnostics");
  cycc->add_option("mode", cyc.mode, "distance|th4|dalpha|candidate");
  cycc->add_option("--degree", cyc.degree, "Maximum polynomial degree");
  cycc->add_option("--levels", cyc.levels, "Dyadic levels");
  cycc->add_option("--alpha", cyc.alpha, "D_alpha exponent");
  cycc->add_option("--gamma", cyc.gamma, "Neighborhood growth exponent");

  std::string suite = "all";
  auto* ver = cli.add_subcommand("verify", "Run property suites");
  ver->add_option("suite", suite, "cutoff|bregman|routes|capacity|cyclicity|all");

  auto* sweep = cli.add_subcommand("sweep", "Route values under grid refinement");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  Output result;
  try {
    if (workers) {
      if (*workers == 0) throw wds::ConfigError("workers", "must be positive");
      wds::set_worker_count(*workers);
    }
    const wds::Scenario s = resolve(o);
    if (*eval)
      result = cmd_eval(s, what);
    else if (*dir)
      result = cmd_dirichlet(s);
    else if (*capc)
      result = cmd_capacity(s, cap);
    else if (*cycc)
      result = cmd_cyclicity(s, cyc);
    else if (*ver)
      result = cmd_verify(s, suite, echo(argc, argv), read_file(o.config));
    else if (*sweep)
      result = cmd_sweep(s);
  } catch (const wds::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  }

  if (out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return kConfigError;
    }
    out << result.text;
  }
  return result.code;
}
