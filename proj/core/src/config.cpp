#include "wds/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace wds {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::vector<double> numbers(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError(key, "expected a number, got '" + tok + "'");
    }
    if (used != tok.size()) throw ConfigError(key, "expected a number, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

double number(const std::string& key, const std::string& value) {
  auto v = numbers(key, value);
  if (v.size() != 1) throw ConfigError(key, "expected exactly one number");
  return v[0];
}

long integer(const std::string& key, const std::string& value, long lo) {
  double v = number(key, value);
  if (v != static_cast<double>(static_cast<long>(v)) || v < static_cast<double>(lo))
    throw ConfigError(key, "expected an integer >= " + std::to_string(lo));
  return static_cast<long>(v);
}

bool power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Scenario parse_config(const std::string& text) {
  Scenario s;
  std::vector<DiscAtom> mu_atoms;
  std::vector<BoundaryAtom> nu_atoms;
  std::vector<double> nu_density;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const bool repeatable = key == "mu.atom" || key == "nu.atom";
    if (!repeatable && !seen.insert(key).second) throw ConfigError(key, "duplicate key");
    if (key == "weight") {
      s.weight_name = value;
    } else if (key == "alpha") {
      s.alpha = number(key, value);
    } else if (key == "mu.atom") {
      auto v = numbers(key, value);
      if (v.size() != 3) throw ConfigError(key, "expected 're im mass'");
      mu_atoms.push_back({cplx(v[0], v[1]), v[2]});
    } else if (key == "nu.atom") {
      auto v = numbers(key, value);
      if (v.size() != 2) throw ConfigError(key, "expected 'angle mass'");
      nu_atoms.push_back({v[0], v[1]});
    } else if (key == "nu.density") {
      nu_density = numbers(key, value);
      if (!power_of_two(nu_density.size()))
        throw ConfigError(key, "sample count must be a power of two");
    } else if (key == "grid.n") {
      s.grid_n = static_cast<std::size_t>(integer(key, value, 8));
      if (!power_of_two(s.grid_n)) throw ConfigError(key, "must be a power of two");
    } else if (key == "grid.radial_blocks") {
      s.radial_blocks = static_cast<int>(integer(key, value, 1));
    } else if (key == "grid.radial_order") {
      s.radial_order = static_cast<int>(integer(key, value, 1));
    } else if (key == "tolerance") {
      s.tolerance = number(key, value);
      if (!(s.tolerance > 0.0)) throw ConfigError(key, "must be positive");
    } else if (key == "seed") {
      s.seed = static_cast<std::uint64_t>(integer(key, value, 0));
    } else if (key == "trials") {
      s.trials = static_cast<int>(integer(key, value, 0));
    } else if (key == "function") {
      s.function = value;
    } else if (key == "set") {
      s.set = value;
    } else if (key == "points") {
      s.points.clear();
      std::istringstream ps(value);
      std::string item;
      while (std::getline(ps, item, ';')) {
        if (trim(item).empty()) continue;
        auto v = numbers(key, item);
        if (v.size() != 2) throw ConfigError(key, "expected 're im' pairs separated by ';'");
        s.points.emplace_back(v[0], v[1]);
      }
    } else {
      throw ConfigError(key, "unknown key");
    }
  }

  try {
    if (s.weight_name == "classical") {
      s.weight = family::classical();
    } else if (s.weight_name == "standard-alpha") {
      s.weight = family::standard_alpha(s.alpha, s.radial_blocks, s.radial_order);
    } else if (s.weight_name == "point-mass-harmonic") {
      // The harmonic point mass itself comes from nu.atom; default delta_1.
      if (nu_atoms.empty()) s.weight = family::point_mass_harmonic();
    } else if (s.weight_name != "atomic" && s.weight_name != "custom") {
      throw ConfigError("weight", "unknown family '" + s.weight_name + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("alpha", e.what());
  }
  for (const auto& a : mu_atoms) s.weight.mu.atoms.push_back(a);
  for (const auto& a : nu_atoms) s.weight.nu.atoms.push_back(a);
  if (!nu_density.empty()) {
    if (!s.weight.nu.density.empty()) throw ConfigError("nu.density", "family already sets a density");
    s.weight.nu.density = std::move(nu_density);
  }
  try {
    s.weight.mu.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("mu.atom", e.what());
  }
  try {
    s.weight.nu.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(nu_atoms.empty() ? "nu.density" : "nu.atom", e.what());
  }
  return s;
}

Scenario load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace wds
