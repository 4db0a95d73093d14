#include "wds/kernel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

#include "wds/potentials.hpp"

namespace wds {

namespace {

PotentialEvaluator evaluator(const DiscMeasure& mu) {
  SuperharmonicWeight w;
  w.mu = mu;
  return PotentialEvaluator(std::move(w));
}

// int over delta in [lo, hi] of 1 / (delta V(delta) + delta^2).
double block_integral(const PotentialEvaluator& pe, double angle, double lo, double hi) {
  auto f = [&](double d) {
    double v = pe.v_mu(Polar{d, angle});
    return 1.0 / (d * v + d * d);
  };
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, 8, 1e-12);
}

// Integrals over the dyadic blocks [2^-k-1, 2^-k] of delta, k = 0..levels-1,
// the last one stopping at delta_min.
std::vector<double> dyadic_blocks(const PotentialEvaluator& pe, double angle, double delta_min, int levels) {
  std::vector<double> out;
  for (int k = 0; k < levels; ++k) {
    double hi = std::ldexp(1.0, -k), lo = std::max(std::ldexp(1.0, -k - 1), delta_min);
    if (lo >= hi) break;
    out.push_back(block_integral(pe, angle, lo, hi));
  }
  return out;
}

}  // namespace

double kernel_diag_estimate(cplx z, const DiscMeasure& mu) {
  const double r = std::abs(z);
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("kernel_diag_estimate needs 0 < |z| < 1");
  auto pe = evaluator(mu);
  const double delta = 1.0 - r;
  const int levels = static_cast<int>(std::ceil(-std::log2(delta))) + 1;
  double s = 1.0;
  for (double b : dyadic_blocks(pe, std::arg(z), delta, levels)) s += b;
  return s;
}

double arc_capacity_estimate(const Arc& arc, const DiscMeasure& mu) {
  if (!(arc.length > 0.0 && arc.length < 0.5))
    throw std::invalid_argument("arc_capacity_estimate needs 0 < |I| < 1/2");
  cplx z = std::polar(1.0 - arc.length, arc.start + 0.5 * arc.length);
  return 1.0 / kernel_diag_estimate(z, mu);
}

std::string to_string(PolarVerdict v) {
  switch (v) {
    case PolarVerdict::Polar: return "polar";
    case PolarVerdict::NonPolar: return "non-polar";
    case PolarVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

PolarReport point_polar_test(double zeta_angle, const DiscMeasure& mu, int k_max) {
  auto pe = evaluator(mu);
  PolarReport rep;
  auto blocks = dyadic_blocks(pe, zeta_angle, 0.0, k_max);
  double s = 0.0;
  rep.partial_integrals.push_back(0.0);
  for (double b : blocks) {
    s += b;
    rep.partial_integrals.push_back(s);
  }
  rep.series = series_verdict(blocks);
  switch (rep.series.verdict) {
    case SeriesVerdict::Divergent: rep.verdict = PolarVerdict::Polar; break;
    case SeriesVerdict::Finite: rep.verdict = PolarVerdict::NonPolar; break;
    case SeriesVerdict::Inconclusive: rep.verdict = PolarVerdict::Inconclusive; break;
  }
  return rep;
}

}  // namespace wds
