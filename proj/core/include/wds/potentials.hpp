#pragma once

#include <vector>

#include "wds/measure.hpp"
#include "wds/types.hpp"

namespace wds {

/// Point of the closed disc in polar form with delta = 1 - |z| kept
/// exactly, so kernels stay accurate within 2^-100 of the boundary.
struct Polar {
  double delta;
  double angle;

  static Polar from(cplx z);
  double r() const { return 1.0 - delta; }
  cplx z() const;
};

/// Evaluates the potentials of a superharmonic weight. Angle-free densities
/// use exact angular averages of each kernel; other densities enter as
/// weighted atoms at their grid nodes.
class PotentialEvaluator {
 public:
  /// log|(1 - conj(w) z)/(z - w)| is always evaluated squared.
  static constexpr double kGreenFactor = 2.0;

  explicit PotentialEvaluator(SuperharmonicWeight w);

  const SuperharmonicWeight& weight() const { return w_; }

  Extended green(cplx z) const { return green(Polar::from(z)); }
  Extended green(Polar z) const;
  double poisson(cplx z) const { return poisson(Polar::from(z)); }
  double poisson(Polar z) const;
  double v_mu(cplx z) const { return v_mu(Polar::from(z)); }
  double v_mu(Polar z) const;
  double psi_mu(cplx z) const { return psi_mu(Polar::from(z)); }
  double psi_mu(Polar z) const;
  double v_r(cplx z, double r) const;
  Extended balayage(double angle) const;
  Extended a_mu(double zeta_angle, double lambda_angle) const;
  double f_mu_profile(double y, double zeta_angle) const;
  /// omega = G_mu + P_nu.
  Extended omega(cplx z) const;

 private:
  struct PolarAtom {
    double delta;
    double angle;
    double mass;
  };

  const DiscDensity* radial() const { return has_radial_ ? &*w_.mu.density : nullptr; }
  template <class K>
  double radial_sum(K kernel) const;
  template <class K>
  Extended radial_sum_checked(K kernel) const;

  SuperharmonicWeight w_;
  std::vector<PolarAtom> atoms_;
  bool has_radial_ = false;
  cvec nu_hat_;
};

}  // namespace wds
