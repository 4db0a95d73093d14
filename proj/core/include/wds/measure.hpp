#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wds/quadrature.hpp"
#include "wds/types.hpp"

namespace wds {

struct DiscAtom {
  cplx position;
  double mass;
};

/// Density with respect to normalized area dA = dx dy / pi, sampled on a
/// grid. values[i * angular + j] belongs to radial node i, angle j.
struct DiscDensity {
  QuadratureGrid grid;
  std::vector<double> values;
  /// Closed form in delta = 1 - r for angle-free densities; lets kernels
  /// with a kink at the evaluation radius re-quadrature one block.
  std::function<double(double)> radial;

  bool angle_free() const { return grid.angular == 1; }
  double value(std::size_t i, std::size_t j = 0) const { return values[i * grid.angular + j]; }
};

/// Riesz measure mu on the open disc.
struct DiscMeasure {
  std::vector<DiscAtom> atoms;
  std::optional<DiscDensity> density;

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;
  bool is_zero() const;
  /// Density nodes of a non-radial density, as weighted atoms.
  std::vector<DiscAtom> density_atoms() const;
};

struct BoundaryAtom {
  double angle;
  double mass;
};

/// Boundary measure nu: atoms plus optional density samples (with respect
/// to normalized arc length) on a uniform grid.
struct BoundaryMeasure {
  std::vector<BoundaryAtom> atoms;
  std::vector<double> density;

  void validate() const;
  bool is_zero() const;
  double total_mass() const;
  /// Level of a constant density, if the density is present and constant.
  std::optional<double> uniform_level() const;
};

/// omega = G_mu + P_nu.
struct SuperharmonicWeight {
  DiscMeasure mu;
  BoundaryMeasure nu;

  void validate() const;
  bool is_zero() const { return mu.is_zero() && nu.is_zero(); }
};

/// Integral of (1 - |w|^2) d mu(w). Diverged when the density's dyadic
/// block sums stop decaying or the cap trips.
Extended riesz_moment(const DiscMeasure& mu);

/// Radial density of the weight (1 - |z|^2)^alpha, i.e. -d dbar of it:
/// alpha (1 - r^2)^(alpha - 2) (1 - alpha r^2), as a function of delta.
double standard_alpha_density(double alpha, double delta);

namespace family {

inline constexpr int kRadialBlocks = 128;
inline constexpr int kRadialOrder = 16;

SuperharmonicWeight classical();
DiscMeasure standard_alpha_measure(double alpha, int blocks = kRadialBlocks,
                                   int order = kRadialOrder);
SuperharmonicWeight standard_alpha(double alpha, int blocks = kRadialBlocks,
                                   int order = kRadialOrder);
SuperharmonicWeight point_mass_harmonic(double angle = 0.0, double mass = 1.0);
SuperharmonicWeight atomic(std::vector<DiscAtom> atoms);
/// sum_{j=1..terms} j^2 delta at (1 - 2^-j) e^{i angle}.
DiscMeasure designed_atomic(double angle, int terms);

}  // namespace family

}  // namespace wds
