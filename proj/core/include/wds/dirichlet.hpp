#pragma once

#include "wds/hardy.hpp"
#include "wds/measure.hpp"
#include "wds/profile.hpp"
#include "wds/types.hpp"

namespace wds {

/// Douglas-type form: A_mu enters with this factor so that the form equals
/// D_mu under the squared Green convention.
inline constexpr double kDouglasCalibration = 0.5;

struct DirichletOptions {
  /// Boundary grid size; raised to the function's own grid when smaller.
  std::size_t n = 4096;
  /// Entropy route by numeric minimization over a instead of the closed
  /// form minimizer.
  bool inf_form = false;
};

/// D_omega(f) by the area, local and entropy routes. The entropy route is
/// only defined for outer functions; otherwise `entropy_applicable` is false
/// and `entropy` holds zero.
struct RouteValues {
  Extended area;
  Extended local;
  Extended entropy;
  bool entropy_applicable = false;
};

RouteValues dirichlet(const HardyFunction& f, const SuperharmonicWeight& w,
                      const DirichletOptions& opt = {});

/// Single routes, for callers that need one value only.
Extended dirichlet_area(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n);
Extended dirichlet_local(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n);
Extended dirichlet_entropy(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n,
                           bool inf_form = false);

Extended douglas_type_form(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n);

struct LocalValues {
  Extended douglas;
  /// Entropy route in the interior, outer formula on the boundary.
  Extended outer;
  bool outer_applicable = false;
};

/// D_w(f) = int |f(zeta) - f(w)|^2 / |zeta - w|^2 dm and the entropy
/// identity (1 - |w|^2) D_w(f) = Ent_{sigma_w}(|f|^2).
LocalValues local_dirichlet_interior(const HardyFunction& f, cplx w, std::size_t n = 4096);

/// D_zeta(f) by difference quotients and by the outer formula with kernel
/// F(2 log|f(lambda)|, 2 log|f(zeta)|) / |zeta - lambda|^2.
LocalValues local_dirichlet_boundary(const HardyFunction& f, double angle, std::size_t n = 4096);

/// int int (|f(zeta)|^2 - |f(lambda)|^2) log|f(zeta)/f(lambda)| /
/// |zeta - lambda|^(2 - alpha) dm dm for outer f.
Extended carleson_type_bound(const HardyFunction& f, double alpha, std::size_t n = 4096);

/// sup |phi'(y)| F_{mu,zeta}(y) times sup phi, both over y = pi 2^-k,
/// k = 0..levels.
double ne_bound(const DistanceProfile& phi, double zeta_angle, const DiscMeasure& mu,
                int levels = 40);

/// int_0^pi int_0^x |phi'(x)| phi(y) / (x phi(x)) dy dx divided by
/// sup phi, with the inner integral cut at pi 2^-levels.
double elementary_integral_ratio(const DistanceProfile& phi, int levels = 40);

}  // namespace wds
