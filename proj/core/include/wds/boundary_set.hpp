#pragma once

#include <string>
#include <vector>

#include "wds/types.hpp"

namespace wds {

/// Closed arc {e^{it} : start <= t <= start + length}; length 0 is a point.
struct Arc {
  double start;
  double length;
};

/// Closed subset of the circle given as a finite union of closed arcs.
/// Distances are chordal: d(e^{is}, e^{it}) = 2 sin(|s - t| / 2).
class BoundarySet {
 public:
  BoundarySet() = default;
  explicit BoundarySet(std::vector<Arc> arcs, std::string label = "arcs");

  static BoundarySet empty();
  static BoundarySet circle();
  static BoundarySet point(double angle);
  static BoundarySet points(const std::vector<double>& angles);
  static BoundarySet arc(double a, double b);
  /// Middle-thirds construction on [start, start + length] after `levels`
  /// subdivisions.
  static BoundarySet cantor(double start, double length, int levels);
  /// 2^n arcs of length L0 2^-n / (n + 1) at level n: length ratios tend to
  /// 1/2 while the total length decays like 1/n.
  static BoundarySet generalized_cantor(double start, double length, int levels);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::string& label() const { return label_; }
  bool is_empty() const { return arcs_.empty(); }
  bool is_circle() const;

  /// Angular distance to the set, in [0, pi].
  double angular_distance(double angle) const;
  double distance(double angle) const;
  /// Arc-length (radians) of E_t = {zeta : d(zeta, E) < t}.
  double neighborhood_measure(double t) const;
  /// Connected components of E_t (E itself when t = 0); a component that
  /// wraps through angle 0 is returned as one arc.
  std::vector<Arc> neighborhood_arcs(double t) const;
  /// Arc-length (radians) of E itself.
  double measure() const { return neighborhood_measure(0.0); }
  /// Nodes 2 pi k / n lying in E_t, or in E when t = 0.
  std::vector<char> node_mask(std::size_t n, double t) const;
  /// Finest scale at which the finite representation is faithful; below it
  /// a truncated Cantor-type set looks like a union of fat arcs.
  double resolution() const { return resolution_; }
  void set_resolution(double r) { resolution_ = r; }

 private:
  std::vector<Arc> arcs_;
  std::string label_;
  double resolution_ = 0.0;
};

/// Half-angle of the chordal ball of radius t: 2 asin(t / 2), or pi for t >= 2.
double chordal_half_angle(double t);

}  // namespace wds
