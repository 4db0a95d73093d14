#pragma once

#include <memory>

#include "wds/outer.hpp"
#include "wds/types.hpp"

namespace wds {

/// Element of H^2 given by Taylor coefficients a_0..a_{n-1}. When built
/// from an outer function the outer data is kept; the entropy route and
/// the boundary outer formula require it.
class HardyFunction {
 public:
  HardyFunction() = default;
  explicit HardyFunction(cvec coeffs);
  /// Coefficients a_0..a_{N/2 - 1} for an outer function on N nodes.
  explicit HardyFunction(const OuterFunction& f);

  static HardyFunction monomial(std::size_t n);
  static HardyFunction constant(cplx c);

  const cvec& coefficients() const { return a_; }
  std::size_t degree_bound() const { return a_.size(); }
  /// Grid size of the boundary data this function lives on; a power of two
  /// at least twice the coefficient count.
  std::size_t grid_size() const { return grid_; }
  bool is_outer() const { return outer_ != nullptr; }
  const OuterFunction& outer() const { return *outer_; }

  cplx operator()(cplx z) const;
  /// Values at (1 - delta) e^{2 pi i k / m}; outer functions use their
  /// exact exponential form, polynomials their coefficients.
  cvec circle_values(double delta, std::size_t m) const;
  /// Radial-limit surrogate at the grid nodes: radius 1 - 1/N^2.
  cvec boundary_values(std::size_t m) const;
  /// Coefficients of f'.
  cvec derivative_coefficients() const;
  cplx derivative(cplx z) const;
  /// f' at (1 - delta) e^{2 pi i k / m}.
  cvec derivative_circle_values(double delta, std::size_t m) const;
  /// Outer functions only: z (log f)'(z) on the same circle. Its imaginary
  /// part is minus the angular derivative of log|f|.
  cvec log_derivative_circle(double delta, std::size_t m) const;
  /// H^2 norm squared, sum |a_n|^2.
  double h2_norm2() const;

 private:
  cvec a_;
  std::size_t grid_ = 1;
  std::shared_ptr<const OuterFunction> outer_;
};

}  // namespace wds
