#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "wds/boundary_set.hpp"
#include "wds/form.hpp"
#include "wds/measure.hpp"
#include "wds/qp.hpp"
#include "wds/series.hpp"

namespace wds {

struct CapacityResult {
  double value = 0.0;
  Eigen::VectorXd minimizer;
  /// Neighbourhood radius the constraint was imposed on.
  double t = 0.0;
  int iterations = 0;
  double kkt_residual = 0.0;
  bool converged = true;
};

/// min u^T Q u over u = 1 on `mask`, 0 <= u <= 1 elsewhere.
CapacityResult capacity_of_nodes(const std::vector<char>& mask, const DirichletFormMatrix& q,
                                 const QpOptions& opt = {});

/// c_omega(E_t) on the form's grid; t = 0 constrains only the nodes in E.
CapacityResult variational_capacity(const BoundarySet& e, double t, const DirichletFormMatrix& q,
                                    const QpOptions& opt = {});
CapacityResult variational_capacity(const BoundarySet& e, double t, const SuperharmonicWeight& w,
                                    std::size_t n, const QpOptions& opt = {});

/// Chordal spacing of an n-point grid.
double grid_spacing(std::size_t n);

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs / rhs, 0 when both vanish.
  double ratio = 0.0;
  bool converged = true;
};

/// c(|f| > t) against ||f||^2 / t^2 for boundary samples f on the form's grid.
InequalityReport weak_type_check(const Eigen::VectorXd& f, double t, const DirichletFormMatrix& q,
                                 const QpOptions& opt = {});

/// Family-wide constant asserted for the strong-type ratio.
inline constexpr double kStrongTypeConstant = 8.0;

/// Upper Darboux sum of int_0^inf c(|f| > t) t dt on t_j = 2^-j ||f||_inf,
/// j = -2..12, against ||f||^2.
InequalityReport strong_type_check(const Eigen::VectorXd& f, const DirichletFormMatrix& q,
                                   const QpOptions& opt = {});

enum class CapacitySource {
  /// QP on the grid; levels with t below two grid spacings are dropped.
  Variational,
  /// Sum of arc estimates over the components of E_t, capped at 1.
  ArcEstimate,
};

struct CapacitySweep {
  std::vector<double> t;
  std::vector<double> capacity;
  std::vector<CapacityResult> details;  // empty for ArcEstimate
};

/// c(E_{t_j}) on t_j = pi 2^-j, j = 0..levels.
CapacitySweep capacity_sweep(const BoundarySet& e, int levels, CapacitySource source,
                             const DirichletFormMatrix* q, const DiscMeasure* mu,
                             const QpOptions& opt = {});

struct ConditionCReport {
  SeriesReport series;
  CapacitySweep sweep;
};

/// sum_j c(E_{t_j}) |eta^2(t_{j+1}) - eta^2(t_j)| from a sweep.
ConditionCReport condition_c(const CapacitySweep& sweep, const std::function<double(double)>& eta);

}  // namespace wds
