#pragma once

#include <vector>

namespace wds {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

/// Supported orders: 4, 8, 12, 16, 20, 24, 30.
const GaussRule& gauss_legendre(int order);

/// Node on [a, b] carrying its distances to both endpoints so callers near
/// a singular endpoint never form a - x or b - x by subtraction.
struct LineNode {
  double x;
  double from_a;
  double from_b;
  double w;
};

/// Composite Gauss rule for the integral of g over [a, b], graded
/// dyadically toward each flagged endpoint over `levels` halvings.
std::vector<LineNode> graded_rule(double a, double b, bool grade_a, bool grade_b, int levels,
                                  int order);

/// Radial quadrature on the disc. Node i sits at r = 1 - delta[i]; the
/// weights integrate g(r) 2r dr, so sum_i w_i g(r_i) approximates
/// the normalized area integral of a radial function.
/// Blocks are [0, 1/2] and then [1 - 2^-k, 1 - 2^-k-1] for k >= 1.
struct QuadratureGrid {
  std::vector<double> delta;
  std::vector<double> radial_weight;
  std::vector<double> block_edges;  // delta values, 1 first, decreasing
  int order = 0;
  std::size_t angular = 1;  // power of two; 1 means angle-free

  static QuadratureGrid dyadic(int blocks, int order, std::size_t angular = 1);

  std::size_t radial_size() const { return delta.size(); }
  std::size_t size() const { return delta.size() * angular; }
  double r(std::size_t i) const { return 1.0 - delta[i]; }
  double node_weight(std::size_t i) const {
    return radial_weight[i] / static_cast<double>(angular);
  }
  double node_angle(std::size_t j) const;
  /// Sum of all node weights.
  double total_weight() const;
  /// Exact normalized area of the discretized region, (1 - delta_min)^2.
  double covered_area() const;
  /// Index of the block containing delta, or -1 outside the grid.
  int block_of(double d) const;
};

}  // namespace wds
