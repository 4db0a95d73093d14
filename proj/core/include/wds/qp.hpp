#pragma once

#include <Eigen/Dense>
#include <vector>

namespace wds {

struct QpOptions {
  double kkt_tolerance = 1e-8;
  int max_iterations = 100000;
};

struct QpResult {
  Eigen::VectorXd u;
  double value = 0.0;
  int iterations = 0;
  double kkt_residual = 0.0;
  bool converged = false;
};

/// min u^T Q u subject to u = 1 on `fixed` and 0 <= u <= 1 elsewhere, for
/// symmetric positive definite Q. Starts from the exact solve with every
/// bound inactive, then projected gradient with Barzilai-Borwein steps and
/// a periodic Cholesky polish on the coordinates strictly inside the box.
QpResult solve_box_qp(const Eigen::MatrixXd& q, const std::vector<char>& fixed,
                      const QpOptions& opt = {});

}  // namespace wds
