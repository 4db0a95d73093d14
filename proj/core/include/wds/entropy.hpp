#pragma once

#include <vector>

#include "wds/types.hpp"

namespace wds {

/// F(x, y) = e^x - e^y - e^y (x - y), with F(x, -inf) = e^x. Evaluated as
/// e^y phi(x - y), phi(d) = e^d - 1 - d, so F(x, x) = 0 exactly and F >= 0.
double bregman_f(double x, double y);

/// E_sigma(e^u) - exp(E_sigma(u)) for probability weights sigma; u may be
/// -infinity where sigma vanishes. Computed as E_sigma F(u, E_sigma u).
double phi_entropy(const std::vector<double>& sigma, const std::vector<double>& u);

/// inf over a of E_sigma F(u, a), by Brent's method on [min u, max u].
double phi_entropy_inf(const std::vector<double>& sigma, const std::vector<double>& u);

/// Harmonic measure sigma_w at w on m uniform nodes:
/// weight_k = (1 - |w|^2) / |zeta_k - w|^2 / m.
struct LocalMeasure {
  cplx w;
  std::vector<double> weights;

  static LocalMeasure make(cplx w, std::size_t m);
  /// Smallest power of two m >= floor with m (1 - |w|) >= 32, so the
  /// aliasing error 2 |w|^m stays below e^-32. Capped at 2^22.
  static std::size_t node_count(cplx w, std::size_t floor);
  double mass() const;
};

}  // namespace wds
