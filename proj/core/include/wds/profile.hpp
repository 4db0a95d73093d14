#pragma once

#include <string>
#include <vector>

#include "wds/types.hpp"

namespace wds {

/// Positive profile phi on (0, pi] used as phi(dist(zeta, E)).
class DistanceProfile {
 public:
  enum class Kind { Constant, Power, Log, ExpLog, Tabulated };

  /// phi = c.
  static DistanceProfile constant(double c = 1.0);
  /// phi(t) = t^-beta.
  static DistanceProfile power(double beta);
  /// phi(t) = log(e pi / t)^p.
  static DistanceProfile log(double p);
  /// phi(t) = exp(c log(e pi / t)^p).
  static DistanceProfile exp_log(double c, double p);
  /// log phi linear in log t between the given (t, log phi) pairs, with the
  /// end slopes continued outside the table. t must increase.
  static DistanceProfile tabulated(std::vector<double> t, std::vector<double> log_phi);

  /// phi(t + eps): bounded variants of profiles singular at 0.
  DistanceProfile with_offset(double eps) const;

  Kind kind() const { return kind_; }
  double offset() const { return offset_; }
  const std::string& name() const { return name_; }

  double operator()(double t) const { return std::exp(log_value(t)); }
  /// log phi(t); t = 0 gives the limit, possibly +-infinity.
  double log_value(double t) const { return base_log(t + offset_); }
  double derivative(double t) const { return base_derivative(t + offset_); }

 private:
  double base_log(double t) const;
  double base_derivative(double t) const;

  Kind kind_ = Kind::Constant;
  std::string name_;
  double a_ = 1.0;
  double b_ = 0.0;
  double offset_ = 0.0;
  std::vector<double> log_t_;
  std::vector<double> log_phi_;
};

struct ClassRReport {
  bool accepted = false;
  std::string violation;  // empty when accepted
  double min_phi_doubling = kInf;   // min of phi(2x) / phi(x)
  double max_phi_doubling = 0.0;
  double min_deriv_doubling = kInf;  // min of phi'(2x) / phi'(x)
  double max_deriv_doubling = 0.0;
};

/// Doubling ratios of members must lie in [1/kDoublingBound, kDoublingBound].
inline constexpr double kDoublingBound = 16.0;

/// Checks decrease of phi, increase of x^2 |phi'(x)| and the doubling bounds
/// on x = pi 2^-k, k = 0..levels.
ClassRReport class_R_check(const DistanceProfile& phi, int levels = 40);

}  // namespace wds
