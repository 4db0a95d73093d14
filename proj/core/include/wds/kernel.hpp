#pragma once

#include <vector>

#include "wds/boundary_set.hpp"
#include "wds/measure.hpp"
#include "wds/series.hpp"
#include "wds/types.hpp"

namespace wds {

/// 1 + int_0^|z| dr / ((1 - r) V_mu(r z/|z|) + (1 - r)^2), by Gauss-Kronrod
/// on dyadic blocks of 1 - r.
double kernel_diag_estimate(cplx z, const DiscMeasure& mu);

/// 1 / kernel_diag_estimate at z_I = (1 - |I|) e^{i mid(I)}; |I| in radians,
/// 0 < |I| < 1/2.
double arc_capacity_estimate(const Arc& arc, const DiscMeasure& mu);

enum class PolarVerdict { Polar, NonPolar, Inconclusive };

std::string to_string(PolarVerdict v);

struct PolarReport {
  PolarVerdict verdict = PolarVerdict::Inconclusive;
  /// I_k = int_0^{1 - 2^-k}, k = 0..k_max.
  std::vector<double> partial_integrals;
  SeriesReport series;
};

inline constexpr int kPolarLevels = 24;

/// Divergence test for int_0^1 dr / ((1 - r) V_mu(r zeta) + (1 - r)^2).
PolarReport point_polar_test(double zeta_angle, const DiscMeasure& mu, int k_max = kPolarLevels);

}  // namespace wds
