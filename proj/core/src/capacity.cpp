#include "wds/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wds/kernel.hpp"

namespace wds {

CapacityResult capacity_of_nodes(const std::vector<char>& mask, const DirichletFormMatrix& q,
                                 const QpOptions& opt) {
  const std::size_t n = q.size();
  if (mask.size() != n) throw std::invalid_argument("node mask size differs from the form size");
  CapacityResult res;
  std::size_t fixed = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
  if (fixed == 0) {
    res.minimizer = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    return res;
  }
  if (fixed == n) {
    res.minimizer = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    res.value = q.value(res.minimizer);
    return res;
  }
  QpResult qp = solve_box_qp(q.full(), mask, opt);
  res.value = qp.value;
  res.minimizer = std::move(qp.u);
  res.iterations = qp.iterations;
  res.kkt_residual = qp.kkt_residual;
  res.converged = qp.converged;
  return res;
}

CapacityResult variational_capacity(const BoundarySet& e, double t, const DirichletFormMatrix& q,
                                    const QpOptions& opt) {
  if (t < 0.0) throw std::invalid_argument("neighbourhood radius must be nonnegative");
  CapacityResult res = capacity_of_nodes(e.node_mask(q.size(), t), q, opt);
  res.t = t;
  return res;
}

CapacityResult variational_capacity(const BoundarySet& e, double t, const SuperharmonicWeight& w,
                                    std::size_t n, const QpOptions& opt) {
  return variational_capacity(e, t, assemble_form(w, n), opt);
}

double grid_spacing(std::size_t n) { return 2.0 * std::sin(kPi / static_cast<double>(n)); }

namespace {

std::vector<char> level_mask(const Eigen::VectorXd& f, double t) {
  std::vector<char> m(static_cast<std::size_t>(f.size()));
  for (Eigen::Index i = 0; i < f.size(); ++i) m[static_cast<std::size_t>(i)] = std::abs(f(i)) > t;
  return m;
}

double safe_ratio(double lhs, double rhs) {
  if (lhs == 0.0) return 0.0;
  return rhs > 0.0 ? lhs / rhs : kInf;
}

}  // namespace

InequalityReport weak_type_check(const Eigen::VectorXd& f, double t, const DirichletFormMatrix& q,
                                 const QpOptions& opt) {
  if (!(t > 0.0)) throw std::invalid_argument("level must be positive");
  InequalityReport rep;
  CapacityResult c = capacity_of_nodes(level_mask(f, t), q, opt);
  rep.lhs = c.value;
  rep.rhs = q.value(f) / (t * t);
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  rep.converged = c.converged;
  return rep;
}

InequalityReport strong_type_check(const Eigen::VectorXd& f, const DirichletFormMatrix& q,
                                   const QpOptions& opt) {
  InequalityReport rep;
  rep.rhs = q.value(f);
  const double sup = f.cwiseAbs().maxCoeff();
  if (sup == 0.0) return rep;
  // c(|f| > t) decreases in t, so c(t_{j+1}) bounds it on [t_{j+1}, t_j].
  auto cap = [&](double t) {
    CapacityResult c = capacity_of_nodes(level_mask(f, t), q, opt);
    rep.converged = rep.converged && c.converged;
    return c.value;
  };
  double sum = 0.0;
  for (int j = -2; j < 12; ++j) {
    double hi = sup * std::ldexp(1.0, -j), lo = 0.5 * hi;
    sum += cap(lo) * 0.5 * (hi * hi - lo * lo);
  }
  const double t_min = sup * std::ldexp(1.0, -12);
  sum += cap(0.0) * 0.5 * t_min * t_min;
  rep.lhs = sum;
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  return rep;
}

CapacitySweep capacity_sweep(const BoundarySet& e, int levels, CapacitySource source,
                             const DirichletFormMatrix* q, const DiscMeasure* mu,
                             const QpOptions& opt) {
  CapacitySweep s;
  for (int j = 0; j <= levels; ++j) {
    const double t = kPi * std::ldexp(1.0, -j);
    if (source == CapacitySource::Variational) {
      if (!q) throw std::invalid_argument("variational sweep needs a form");
      if (t < 2.0 * grid_spacing(q->size())) break;
      CapacityResult c = variational_capacity(e, t, *q, opt);
      s.t.push_back(t);
      s.capacity.push_back(c.value);
      s.details.push_back(std::move(c));
    } else {
      if (!mu) throw std::invalid_argument("arc-estimate sweep needs a disc measure");
      double c = 0.0;
      for (const Arc& a : e.neighborhood_arcs(t)) {
        // Components too long for the estimate are bounded by c(T) = 1.
        c += a.length < 0.5 ? arc_capacity_estimate(a, *mu) : 1.0;
      }
      s.t.push_back(t);
      s.capacity.push_back(std::min(c, 1.0));
    }
  }
  return s;
}

ConditionCReport condition_c(const CapacitySweep& sweep, const std::function<double(double)>& eta) {
  ConditionCReport rep;
  std::vector<double> inc;
  for (std::size_t j = 0; j + 1 < sweep.t.size(); ++j) {
    double a = eta(sweep.t[j]), b = eta(sweep.t[j + 1]);
    inc.push_back(sweep.capacity[j] * std::abs(b * b - a * a));
  }
  rep.series = series_verdict(inc);
  rep.sweep = sweep;
  return rep;
}

}  // namespace wds
