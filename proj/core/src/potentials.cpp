#include "wds/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wds/fft.hpp"
#include "wds/spectral.hpp"

namespace wds {

namespace {

double sin2half(double a) {
  double s = std::sin(0.5 * a);
  return s * s;
}

// 1 - r1 r2 from the deltas.
double one_minus_prod(double d1, double d2) { return d1 + d2 - d1 * d2; }

// |1 - conj(w) z|^2
double conj_dist2(double d1, double a1, double d2, double a2) {
  double u = one_minus_prod(d1, d2);
  return u * u + 4.0 * (1.0 - d1) * (1.0 - d2) * sin2half(a1 - a2);
}

// |z - w|^2
double dist2(double d1, double a1, double d2, double a2) {
  double dr = d2 - d1;
  return dr * dr + 4.0 * (1.0 - d1) * (1.0 - d2) * sin2half(a1 - a2);
}

// |zeta - z|^2 for zeta on the circle at angle phi.
double boundary_dist2(double d, double a, double phi) {
  return d * d + 4.0 * (1.0 - d) * sin2half(a - phi);
}

double one_minus_sq(double d) { return d * (2.0 - d); }

// Block sums of a convergent radial integral decay toward the boundary.
bool tail_diverges(const std::vector<double>& blocks, double total) {
  if (blocks.size() < 4) return false;
  double last = blocks.back(), prev = blocks[blocks.size() - 2];
  return last > 1e-6 * std::max(total, 1e-300) && last >= 0.9 * prev;
}

}  // namespace

Polar Polar::from(cplx z) {
  double r = std::abs(z);
  return {1.0 - r, r == 0.0 ? 0.0 : std::arg(z)};
}

cplx Polar::z() const { return std::polar(1.0 - delta, angle); }

PotentialEvaluator::PotentialEvaluator(SuperharmonicWeight w) : w_(std::move(w)) {
  for (const auto& a : w_.mu.atoms) {
    Polar p = Polar::from(a.position);
    atoms_.push_back({p.delta, p.angle, a.mass});
  }
  if (w_.mu.density) {
    if (w_.mu.density->angle_free()) {
      has_radial_ = true;
    } else {
      const auto& g = w_.mu.density->grid;
      for (std::size_t i = 0; i < g.radial_size(); ++i)
        for (std::size_t j = 0; j < g.angular; ++j) {
          double m = g.node_weight(i) * w_.mu.density->value(i, j);
          if (m > 0.0) atoms_.push_back({g.delta[i], g.node_angle(j), m});
        }
    }
  }
  if (!w_.nu.density.empty()) {
    if (!is_pow2(w_.nu.density.size()))
      throw std::invalid_argument("boundary density size must be a power of two");
    nu_hat_ = fourier_coefficients(w_.nu.density);
  }
}

template <class K>
double PotentialEvaluator::radial_sum(K kernel) const {
  const DiscDensity* rd = radial();
  if (!rd) return 0.0;
  const auto& g = rd->grid;
  double s = 0.0;
  for (std::size_t i = 0; i < g.radial_size(); ++i)
    s += g.radial_weight[i] * rd->values[i] * kernel(g.delta[i]);
  return s;
}

template <class K>
Extended PotentialEvaluator::radial_sum_checked(K kernel) const {
  const DiscDensity* rd = radial();
  if (!rd) return Extended::finite(0.0);
  const auto& g = rd->grid;
  const std::size_t per_block = static_cast<std::size_t>(g.order);
  std::vector<double> blocks;
  double total = 0.0, block = 0.0;
  for (std::size_t i = 0; i < g.radial_size(); ++i) {
    block += g.radial_weight[i] * rd->values[i] * kernel(g.delta[i]);
    if ((i + 1) % per_block == 0) {
      blocks.push_back(block);
      total += block;
      block = 0.0;
    }
  }
  if (tail_diverges(blocks, total)) return Extended::diverged(total);
  return capped(total);
}

Extended PotentialEvaluator::green(Polar z) const {
  double s = 0.0;
  for (const auto& a : atoms_) {
    double d2 = dist2(z.delta, z.angle, a.delta, a.angle);
    if (d2 == 0.0) return Extended::diverged(s);
    s += a.mass * std::log(conj_dist2(z.delta, z.angle, a.delta, a.angle) / d2);
  }
  if (const DiscDensity* rd = radial()) {
    auto kernel = [&](double d) { return -2.0 * std::log1p(-std::min(z.delta, d)); };
    const auto& g = rd->grid;
    int kb = g.block_of(z.delta);
    if (kb < 0 || !rd->radial) {
      s += radial_sum(kernel);
    } else {
      // The kernel has a kink at d = z.delta; split that block there.
      const std::size_t per_block = static_cast<std::size_t>(g.order);
      for (std::size_t i = 0; i < g.radial_size(); ++i)
        if (i / per_block != static_cast<std::size_t>(kb))
          s += g.radial_weight[i] * rd->values[i] * kernel(g.delta[i]);
      // Graded toward the kink; at z = 0 it is a log r singularity.
      double hi = g.block_edges[kb], lo = g.block_edges[kb + 1];
      for (auto [a, b] : {std::pair{lo, z.delta}, std::pair{z.delta, hi}}) {
        if (b <= a) continue;
        for (const LineNode& nd : graded_rule(a, b, a == z.delta, b == z.delta, 40, g.order))
          s += nd.w * 2.0 * (1.0 - nd.x) * rd->radial(nd.x) * kernel(nd.x);
      }
    }
  }
  return capped(kGreenFactor / 2.0 * s);
}

double PotentialEvaluator::poisson(Polar z) const {
  double s = 0.0;
  const double p = one_minus_sq(z.delta);
  for (const auto& a : w_.nu.atoms) s += a.mass * p / boundary_dist2(z.delta, z.angle, a.angle);
  if (!nu_hat_.empty()) {
    const std::size_t n = nu_hat_.size();
    s += nu_hat_[0].real();
    for (std::size_t k = 1; k < n / 2; ++k)
      s += 2.0 * radius_power(z.delta, double(k)) *
           (nu_hat_[k] * std::polar(1.0, double(k) * z.angle)).real();
    if (n >= 2)
      s += nu_hat_[n / 2].real() * radius_power(z.delta, double(n / 2)) *
           std::cos(0.5 * double(n) * z.angle);
  }
  return s;
}

double PotentialEvaluator::psi_mu(Polar z) const {
  const double p = one_minus_sq(z.delta);
  double s = 0.0;
  for (const auto& a : atoms_) s += a.mass * p / conj_dist2(z.delta, z.angle, a.delta, a.angle);
  s += radial_sum([&](double d) {
    double u = one_minus_prod(z.delta, d);
    return p / (u * (2.0 - u));
  });
  return s;
}

double PotentialEvaluator::v_mu(Polar z) const {
  const double p = one_minus_sq(z.delta);
  double s = 0.0;
  for (const auto& a : atoms_)
    s += a.mass * p * one_minus_sq(a.delta) / conj_dist2(z.delta, z.angle, a.delta, a.angle);
  s += radial_sum([&](double d) {
    double u = one_minus_prod(z.delta, d);
    return p * one_minus_sq(d) / (u * (2.0 - u));
  });
  return s;
}

double PotentialEvaluator::v_r(cplx z, double r) const {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("v_r requires r in (0, 1)");
  Polar p = Polar::from(z);
  Polar rz{1.0 - r * (1.0 - p.delta), p.angle};
  double rr = r * r * (1.0 - p.delta) * (1.0 - p.delta);
  return r * r * one_minus_sq(p.delta) / (1.0 - rr) * poisson(rz);
}

Extended PotentialEvaluator::balayage(double angle) const {
  double s = 0.0;
  for (const auto& a : atoms_) {
    double d2 = boundary_dist2(a.delta, a.angle, angle);
    s += a.mass * one_minus_sq(a.delta) / d2;
  }
  return Extended::finite(s) + radial_sum_checked([](double) { return 1.0; });
}

Extended PotentialEvaluator::a_mu(double zeta, double lambda) const {
  double s = 0.0;
  for (const auto& a : atoms_) {
    double p = one_minus_sq(a.delta);
    s += a.mass * p * p /
         (boundary_dist2(a.delta, a.angle, zeta) * boundary_dist2(a.delta, a.angle, lambda));
  }
  const double s2 = sin2half(zeta - lambda);
  return Extended::finite(s) + radial_sum_checked([&](double d) {
           double r2 = (1.0 - d) * (1.0 - d);
           double p = one_minus_sq(d);
           return p * (1.0 + r2) / (p * p + 4.0 * r2 * s2);
         });
}

double PotentialEvaluator::f_mu_profile(double y, double zeta) const {
  const double y2 = y * y;
  double s = 0.0;
  for (const auto& a : atoms_) {
    double ds = std::remainder(a.angle - zeta, kTwoPi);
    s += a.mass * a.delta * y2 / (a.delta * a.delta + ds * ds + y2);
  }
  s += radial_sum([&](double d) {
    double q = std::sqrt(d * d + y2);
    return d * y2 * std::atan(kPi / q) / (kPi * q);
  });
  return s;
}

Extended PotentialEvaluator::omega(cplx z) const {
  Polar p = Polar::from(z);
  return green(p) + Extended::finite(poisson(p));
}

}  // namespace wds
