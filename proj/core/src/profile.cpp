#include "wds/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wds {

namespace {

double log_ratio(double t) { return 1.0 + std::log(kPi / t); }  // log(e pi / t)

}  // namespace

DistanceProfile DistanceProfile::constant(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("constant profile must be positive");
  DistanceProfile p;
  p.kind_ = Kind::Constant;
  p.a_ = c;
  p.name_ = "constant";
  return p;
}

DistanceProfile DistanceProfile::power(double beta) {
  DistanceProfile p;
  p.kind_ = Kind::Power;
  p.a_ = beta;
  p.name_ = "power";
  return p;
}

DistanceProfile DistanceProfile::log(double power) {
  DistanceProfile p;
  p.kind_ = Kind::Log;
  p.a_ = power;
  p.name_ = "log";
  return p;
}

DistanceProfile DistanceProfile::exp_log(double c, double power) {
  DistanceProfile p;
  p.kind_ = Kind::ExpLog;
  p.a_ = c;
  p.b_ = power;
  p.name_ = "exp-log";
  return p;
}

DistanceProfile DistanceProfile::tabulated(std::vector<double> t, std::vector<double> log_phi) {
  if (t.size() < 2 || t.size() != log_phi.size())
    throw std::invalid_argument("tabulated profile needs matching tables of size >= 2");
  DistanceProfile p;
  p.kind_ = Kind::Tabulated;
  p.name_ = "tabulated";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || (i > 0 && !(t[i] > t[i - 1])))
      throw std::invalid_argument("tabulated profile abscissae must be positive and increasing");
    p.log_t_.push_back(std::log(t[i]));
  }
  p.log_phi_ = std::move(log_phi);
  return p;
}

DistanceProfile DistanceProfile::with_offset(double eps) const {
  if (!(eps >= 0.0)) throw std::invalid_argument("profile offset must be nonnegative");
  DistanceProfile p = *this;
  p.offset_ = eps;
  return p;
}

double DistanceProfile::base_log(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return std::log(a_);
    case Kind::Power:
      if (t == 0.0) return a_ == 0.0 ? 0.0 : (a_ > 0.0 ? kInf : -kInf);
      return -a_ * std::log(t);
    case Kind::Log:
      if (t == 0.0) return a_ == 0.0 ? 0.0 : (a_ > 0.0 ? kInf : -kInf);
      return a_ * std::log(log_ratio(t));
    case Kind::ExpLog:
      if (t == 0.0) {
        if (b_ < 0.0 || a_ == 0.0) return 0.0;
        if (b_ == 0.0) return a_;
        return a_ > 0.0 ? kInf : -kInf;
      }
      return a_ * std::pow(log_ratio(t), b_);
    case Kind::Tabulated: {
      const auto& x = log_t_;
      const auto& y = log_phi_;
      const std::size_t n = x.size();
      if (t == 0.0) {
        double slope = (y[1] - y[0]) / (x[1] - x[0]);
        return slope == 0.0 ? y[0] : (slope > 0.0 ? -kInf : kInf);
      }
      double lt = std::log(t);
      std::size_t i;
      if (lt <= x[0]) {
        i = 0;
      } else if (lt >= x[n - 1]) {
        i = n - 2;
      } else {
        i = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), lt) - x.begin()) - 1;
      }
      double s = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
      return y[i] + s * (lt - x[i]);
    }
  }
  return 0.0;
}

double DistanceProfile::base_derivative(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return 0.0;
    case Kind::Power:
      return -a_ * std::pow(t, -a_ - 1.0);
    case Kind::Log:
      return -a_ * std::pow(log_ratio(t), a_ - 1.0) / t;
    case Kind::ExpLog: {
      double l = log_ratio(t);
      return -std::exp(base_log(t)) * a_ * b_ * std::pow(l, b_ - 1.0) / t;
    }
    case Kind::Tabulated: {
      const auto& x = log_t_;
      const std::size_t n = x.size();
      double lt = std::log(t);
      std::size_t i = 0;
      if (lt >= x[n - 1]) {
        i = n - 2;
      } else if (lt > x[0]) {
        i = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), lt) - x.begin()) - 1;
      }
      double s = (log_phi_[i + 1] - log_phi_[i]) / (x[i + 1] - x[i]);
      return std::exp(base_log(t)) * s / t;
    }
  }
  return 0.0;
}

ClassRReport class_R_check(const DistanceProfile& phi, int levels) {
  ClassRReport rep;
  auto note = [&](const char* v) {
    if (rep.violation.empty()) rep.violation = v;
  };
  // x_k = pi 2^-k decreases in k.
  double prev_phi = 0.0, prev_energy = 0.0, prev_d = 0.0;
  for (int k = 0; k <= levels; ++k) {
    double x = std::ldexp(kPi, -k);
    double f = phi(x), d = phi.derivative(x);
    double energy = x * x * std::abs(d);
    if (k > 0) {
      const double tol = 1e-12;
      if (f < prev_phi * (1.0 - tol)) note("phi must be decreasing");
      if (energy > prev_energy * (1.0 + tol) + 1e-300) note("x^2 |phi'(x)| must be increasing");
      double r = prev_phi / f;
      rep.min_phi_doubling = std::min(rep.min_phi_doubling, r);
      rep.max_phi_doubling = std::max(rep.max_phi_doubling, r);
      double rd = (prev_d == 0.0 && d == 0.0) ? 1.0 : prev_d / d;
      rep.min_deriv_doubling = std::min(rep.min_deriv_doubling, rd);
      rep.max_deriv_doubling = std::max(rep.max_deriv_doubling, rd);
    }
    if (d > 0.0) note("phi must be decreasing");
    prev_phi = f;
    prev_energy = energy;
    prev_d = d;
  }
  auto inside = [](double lo, double hi) {
    return lo >= 1.0 / kDoublingBound && hi <= kDoublingBound;
  };
  if (!inside(rep.min_phi_doubling, rep.max_phi_doubling)) note("phi doubling bound");
  if (!(rep.min_deriv_doubling >= 0.0) ||
      !inside(rep.min_deriv_doubling, rep.max_deriv_doubling))
    note("phi' doubling bound");
  rep.accepted = rep.violation.empty();
  return rep;
}

}  // namespace wds
