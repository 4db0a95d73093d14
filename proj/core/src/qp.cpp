#include "wds/qp.hpp"

#include <algorithm>
#include <cmath>

namespace wds {

namespace {

// Projected-gradient residual of the box problem (gradient of u^T Q u).
double kkt(const Eigen::VectorXd& u, const Eigen::VectorXd& g, const std::vector<char>& fixed) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (fixed[i]) continue;
    double gi = g(i);
    if (u(i) <= 0.0)
      gi = std::min(gi, 0.0);
    else if (u(i) >= 1.0)
      gi = std::max(gi, 0.0);
    r = std::max(r, std::abs(gi));
  }
  return r;
}

void project(Eigen::VectorXd& u, const std::vector<char>& fixed) {
  for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = fixed[i] ? 1.0 : std::clamp(u(i), 0.0, 1.0);
}

// Exact minimizer over the coordinates strictly inside the box, bounds
// frozen, by Cholesky on the free block. With an M-matrix Q and no bound
// active this is already the answer (discrete maximum principle).
void polish(const Eigen::MatrixXd& q, Eigen::VectorXd& u, const std::vector<char>& fixed,
            bool all_free) {
  std::vector<Eigen::Index> free;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (!fixed[i] && (all_free || (u(i) > 0.0 && u(i) < 1.0))) free.push_back(i);
  if (free.empty()) return;
  const Eigen::Index m = static_cast<Eigen::Index>(free.size());
  Eigen::VectorXd frozen = u;
  for (Eigen::Index i : free) frozen(i) = 0.0;
  const Eigen::VectorXd rhs_full = -(q * frozen);
  Eigen::MatrixXd qf(m, m);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    rhs(a) = rhs_full(free[a]);
    for (Eigen::Index b = 0; b < m; ++b) qf(a, b) = q(free[a], free[b]);
  }
  const Eigen::VectorXd x = qf.llt().solve(rhs);
  for (Eigen::Index a = 0; a < m; ++a) u(free[a]) = x(a);
  project(u, fixed);
}

}  // namespace

QpResult solve_box_qp(const Eigen::MatrixXd& q, const std::vector<char>& fixed, const QpOptions& opt) {
  const Eigen::Index n = q.rows();
  QpResult res;
  const double scale = std::max(q.diagonal().maxCoeff(), 1e-300);
  const double tol = opt.kkt_tolerance * scale;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  project(u, fixed);
  polish(q, u, fixed, true);
  Eigen::VectorXd g = 2.0 * (q * u);
  double step = 1.0 / (2.0 * scale);
  int iterations = 1;
  constexpr int kPolishEvery = 50;
  while (iterations < opt.max_iterations) {
    res.kkt_residual = kkt(u, g, fixed);
    if (res.kkt_residual <= tol) break;
    const Eigen::VectorXd prev = u, prev_g = g;
    u -= step * g;
    project(u, fixed);
    g = 2.0 * (q * u);
    ++iterations;
    const Eigen::VectorXd s = u - prev, y = g - prev_g;
    const double sy = s.dot(y);
    step = sy > 0.0 ? s.squaredNorm() / sy : 1.0 / (2.0 * scale);
    if (iterations % kPolishEvery == 0) {
      polish(q, u, fixed, false);
      g = 2.0 * (q * u);
      ++iterations;
    }
  }
  res.kkt_residual = kkt(u, g, fixed);
  res.converged = res.kkt_residual <= tol;
  res.iterations = iterations;
  res.value = u.dot(q * u);
  res.u = std::move(u);
  return res;
}

}  // namespace wds
