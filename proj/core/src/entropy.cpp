#include "wds/entropy.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <stdexcept>

#include "wds/fft.hpp"

namespace wds {

namespace {

// e^d - 1 - d, with the Taylor series near 0.
double phi(double d) {
  if (std::abs(d) < 0.1) {
    double term = d * d / 2.0, s = 0.0;
    for (int k = 3; k <= 12; ++k) {
      s += term;
      term *= d / k;
    }
    return s;
  }
  return std::expm1(d) - d;
}

}  // namespace

double bregman_f(double x, double y) {
  if (y == -kInf) return std::exp(x);
  if (x == -kInf) return kInf;
  return std::exp(y) * phi(x - y);
}

double phi_entropy(const std::vector<double>& sigma, const std::vector<double>& u) {
  if (sigma.size() != u.size()) throw std::invalid_argument("phi_entropy: size mismatch");
  double mean = 0.0, e_exp = 0.0;
  bool vanishes = false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (sigma[k] == 0.0) continue;
    if (u[k] == -kInf) {
      vanishes = true;
      continue;
    }
    mean += sigma[k] * u[k];
    e_exp += sigma[k] * std::exp(u[k]);
  }
  if (vanishes) return e_exp;
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (sigma[k] != 0.0) s += sigma[k] * bregman_f(u[k], mean);
  return s;
}

double phi_entropy_inf(const std::vector<double>& sigma, const std::vector<double>& u) {
  double lo = kInf, hi = -kInf;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (sigma[k] == 0.0 || !std::isfinite(u[k])) continue;
    lo = std::min(lo, u[k]);
    hi = std::max(hi, u[k]);
  }
  if (!(lo <= hi)) return 0.0;
  auto objective = [&](double a) {
    double s = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k)
      if (sigma[k] != 0.0) s += sigma[k] * bregman_f(u[k], a);
    return s;
  };
  if (lo == hi) return objective(lo);
  auto r = boost::math::tools::brent_find_minima(objective, lo, hi, 50);
  return std::min({r.second, objective(lo), objective(hi)});
}

LocalMeasure LocalMeasure::make(cplx w, std::size_t m) {
  if (!(std::abs(w) < 1.0)) throw std::invalid_argument("local measure needs |w| < 1");
  LocalMeasure s{w, std::vector<double>(m)};
  const double r = std::abs(w);
  const double p = (1.0 - r) * (1.0 + r);
  for (std::size_t k = 0; k < m; ++k) {
    cplx zeta = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(m));
    s.weights[k] = p / std::norm(zeta - w) / static_cast<double>(m);
  }
  return s;
}

std::size_t LocalMeasure::node_count(cplx w, std::size_t floor) {
  double need = 32.0 / (1.0 - std::abs(w));
  std::size_t m = next_pow2(std::max<std::size_t>(floor, 1));
  while (static_cast<double>(m) < need && m < (std::size_t{1} << 22)) m *= 2;
  return m;
}

double LocalMeasure::mass() const {
  double s = 0.0;
  for (double v : weights) s += v;
  return s;
}

}  // namespace wds
