#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wds/measure.hpp"
#include "wds/types.hpp"

namespace wds {

/// Schema or invariant violation; key() names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Weight plus run parameters. Explicit mu.atom / nu.atom / nu.density
/// entries are added on top of the named family.
struct Scenario {
  SuperharmonicWeight weight;
  std::string weight_name = "classical";
  double alpha = 0.5;
  std::size_t grid_n = 4096;
  int radial_blocks = family::kRadialBlocks;
  int radial_order = family::kRadialOrder;
  double tolerance = 0.02;
  std::uint64_t seed = 1;
  /// 0 selects each verify suite's own default count.
  int trials = 0;
  std::string function = "random-trig";
  std::string set = "point 0";
  std::vector<cplx> points;
};

/// "key = value" lines; '#' starts a comment. Keys: weight, alpha,
/// mu.atom (re im mass, repeatable), nu.atom (angle mass, repeatable),
/// nu.density (values), grid.n, grid.radial_blocks, grid.radial_order,
/// tolerance, seed, trials, function, set, points ("re im; re im; ...").
Scenario parse_config(const std::string& text);
Scenario load_config(const std::string& path);

}  // namespace wds
