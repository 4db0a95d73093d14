#pragma once

#include <Eigen/Dense>
#include <string>

#include "wds/measure.hpp"

namespace wds {

/// Discretization of ||u||^2 = D_omega^h(u) + ||u||_{L^2}^2 on N circle nodes
/// for piecewise-linear u. The Dirichlet part is the weighted graph
/// Laplacian of symmetric pair weights S >= 0, so it vanishes on constants
/// and Q = I/N + energy is a nonsingular M-matrix.
class DirichletFormMatrix {
 public:
  DirichletFormMatrix() = default;
  DirichletFormMatrix(Eigen::MatrixXd energy, std::string diagonal_note);

  std::size_t size() const { return static_cast<std::size_t>(energy_.rows()); }
  const Eigen::MatrixXd& energy() const { return energy_; }
  /// Q = energy + I / N.
  Eigen::MatrixXd full() const;
  double l2_weight() const { return 1.0 / static_cast<double>(size()); }
  const std::string& diagonal_note() const { return note_; }

  double dirichlet_part(const Eigen::VectorXd& u) const { return u.dot(energy_ * u); }
  double value(const Eigen::VectorXd& u) const { return dirichlet_part(u) + l2_weight() * u.squaredNorm(); }

  /// Binary layout: "WDSQ", uint32 version 1, uint64 rows, uint64 cols,
  /// then rows * cols little-endian float64 of Q in row-major order.
  void export_binary(const std::string& path) const;

 private:
  Eigen::MatrixXd energy_;
  std::string note_;
};

/// Pair weights: the A_mu part enters as (calibration) A_mu / N^2 per ordered
/// pair; the nu part uses P1 hat-function cell integrals of 1/|zeta - lambda|^2,
/// exact (tau^2 weight) on the two cells touching the evaluation node.
/// nu atoms off the grid are split linearly between their two nodes.
DirichletFormMatrix assemble_form(const SuperharmonicWeight& w, std::size_t n);

/// P1 weights w(d), d = 0..n-1, of the kernel 1/|zeta_0 - lambda|^2 for a
/// unit mass at node 0: D(u) = sum_d w(d) |u_0 - u_d|^2.
std::vector<double> boundary_pair_weights(std::size_t n);

}  // namespace wds
