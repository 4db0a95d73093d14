#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wds/boundary_set.hpp"
#include "wds/potentials.hpp"
#include "wds/profile.hpp"
#include "wds/types.hpp"

namespace wds {

/// Samples of h = log|f*| at t_k = 2 pi k / N, N a power of two. Entries
/// equal to -infinity mark zeros of f*; at most sqrt(N) are admitted.
class BoundaryLogModulus {
 public:
  BoundaryLogModulus() = default;
  explicit BoundaryLogModulus(std::vector<double> samples);

  template <class F>
  static BoundaryLogModulus from_function(std::size_t n, F h) {
    std::vector<double> s(n);
    for (std::size_t k = 0; k < n; ++k)
      s[k] = h(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    return BoundaryLogModulus(std::move(s));
  }
  /// Rows "angle,log_modulus" on the uniform grid, in order; a header row
  /// and '#' comments are skipped.
  static BoundaryLogModulus from_csv(const std::string& path);

  std::size_t size() const { return raw_.size(); }
  const std::vector<double>& samples() const { return raw_; }
  /// Samples with every -infinity replaced by the value that makes the
  /// trapezoid rule exact for a log|zeta - zeta_k| singularity.
  const std::vector<double>& corrected() const { return corrected_; }
  const std::vector<std::size_t>& zero_nodes() const { return zeros_; }
  double mean() const { return mean_; }
  double angle(std::size_t k) const {
    return kTwoPi * static_cast<double>(k) / static_cast<double>(raw_.size());
  }

 private:
  std::vector<double> raw_;
  std::vector<double> corrected_;
  std::vector<std::size_t> zeros_;
  double mean_ = 0.0;
};

/// f = exp(Herglotz integral of h), unimodular constant 1. The Herglotz
/// integral is the band-limited interpolant of h extended analytically, so
/// evaluation has no boundary-layer quadrature error at any radius.
class OuterFunction {
 public:
  OuterFunction() : OuterFunction(BoundaryLogModulus(std::vector<double>{0.0})) {}
  explicit OuterFunction(BoundaryLogModulus h);

  const BoundaryLogModulus& log_modulus() const { return h_; }
  std::size_t size() const { return h_.size(); }
  /// Taylor coefficients c_0..c_{N/2} of log f.
  const cvec& log_coefficients() const { return c_; }

  cplx operator()(cplx z) const;
  cplx log_value(cplx z) const;
  /// f(0) = exp(mean of h).
  double at_zero() const { return std::exp(h_.mean()); }
  /// f at (1 - delta) e^{2 pi i k / m}, k < m, for m >= N.
  cvec circle_values(double delta, std::size_t m) const;
  /// log|f| on the same circle.
  std::vector<double> circle_log_modulus(double delta, std::size_t m) const;
  /// Taylor coefficients a_0..a_{count-1} of f, from 4 count samples of f
  /// on the unit circle.
  cvec taylor_coefficients(std::size_t count) const;

 private:
  BoundaryLogModulus h_;
  cvec c_;
};

/// Radius of the radial-limit surrogate f(zeta) = f((1 - 1/N^2) zeta).
inline double boundary_delta(std::size_t n) {
  return 1.0 / (static_cast<double>(n) * static_cast<double>(n));
}

OuterFunction outer_from_log_modulus(std::vector<double> h);
OuterFunction cutoff_min(const OuterFunction& f, const OuterFunction& g);
OuterFunction cutoff_max(const OuterFunction& f, const OuterFunction& g);
/// f wedge f^2: log modulus min(h, 2h).
OuterFunction wedge_square(const OuterFunction& f);
OuterFunction product(const OuterFunction& f, const OuterFunction& g);

/// Outer function with log modulus log phi(dist(zeta, E)) sampled on n
/// nodes. Nodes in E become zeros when phi(0+) = 0; when phi(0+) is
/// infinite they take the value at half a grid spacing. Sets of positive
/// length are rejected when phi(0+) = 0.
OuterFunction distance_outer(const DistanceProfile& phi, const BoundarySet& e, std::size_t n);

/// (f_Gamma, f_{T \ Gamma}) for the open arc Gamma = (a, b). With
/// L = log|(zeta - e^{ia})(e^{ib} - zeta)|, the log moduli are L + h 1_Gamma
/// and L + h 1_{T \ Gamma}.
std::pair<OuterFunction, OuterFunction> arc_localize(const OuterFunction& f, double a, double b);

}  // namespace wds
