#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "wds/boundary_set.hpp"
#include "wds/hardy.hpp"
#include "wds/outer.hpp"

namespace wds {

/// Set specs: "empty", "circle", "point a", "points a b ...", "arc a b",
/// "cantor start length levels", "generalized-cantor start length levels".
/// Angles in radians. Throws std::invalid_argument on a malformed spec.
BoundarySet parse_set(const std::string& spec);

/// log|f*| = sum_{k <= d} (a_k cos kt + b_k sin kt), d uniform in 1..6,
/// a_k, b_k uniform in (-1, 1) scaled by 0.5 / k^2.
OuterFunction random_trig_outer(std::mt19937_64& rng, std::size_t n);

/// Function specs, on an n-node boundary grid:
///   "constant c", "monomial k", "one-minus-z", "two-plus-cos",
///   "random-trig" (drawn from `seed`),
///   "distance log p | power b | exp-log c p" (distance outer function to
///   the set `set_spec`, profile phi as in DistanceProfile),
///   "csv path" (angle,log_modulus rows).
HardyFunction make_function(const std::string& spec, std::size_t n, std::uint64_t seed,
                            const std::string& set_spec);

}  // namespace wds
