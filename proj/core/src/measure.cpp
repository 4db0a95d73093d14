#include "wds/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wds {

void DiscMeasure::validate() const {
  for (const auto& a : atoms) {
    if (!(std::abs(a.position) < 1.0))
      throw std::invalid_argument("disc atom must lie strictly inside the unit disc");
    if (!(a.mass >= 0.0) || !std::isfinite(a.mass))
      throw std::invalid_argument("disc atom mass must be finite and nonnegative");
  }
  if (density) {
    if (density->values.size() != density->grid.size())
      throw std::invalid_argument("disc density size does not match its grid");
    for (double v : density->values)
      if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("disc density values must be finite and nonnegative");
  }
  if (riesz_moment(*this).infinite)
    throw std::invalid_argument("riesz moment of mu diverges");
}

bool DiscMeasure::is_zero() const {
  for (const auto& a : atoms)
    if (a.mass > 0.0) return false;
  if (density)
    for (double v : density->values)
      if (v > 0.0) return false;
  return true;
}

std::vector<DiscAtom> DiscMeasure::density_atoms() const {
  std::vector<DiscAtom> out;
  if (!density) return out;
  const auto& g = density->grid;
  for (std::size_t i = 0; i < g.radial_size(); ++i)
    for (std::size_t j = 0; j < g.angular; ++j) {
      double m = g.node_weight(i) * density->value(i, j);
      if (m > 0.0) out.push_back({std::polar(g.r(i), g.node_angle(j)), m});
    }
  return out;
}

void BoundaryMeasure::validate() const {
  for (const auto& a : atoms) {
    if (!(a.angle >= 0.0 && a.angle < kTwoPi))
      throw std::invalid_argument("boundary atom angle must lie in [0, 2 pi)");
    if (!(a.mass >= 0.0) || !std::isfinite(a.mass))
      throw std::invalid_argument("boundary atom mass must be finite and nonnegative");
  }
  std::vector<double> angles;
  for (const auto& a : atoms) angles.push_back(a.angle);
  std::sort(angles.begin(), angles.end());
  if (std::adjacent_find(angles.begin(), angles.end()) != angles.end())
    throw std::invalid_argument("boundary atom angles must be pairwise distinct");
  for (double v : density)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("boundary density values must be finite and nonnegative");
  if (!density.empty() && (density.size() & (density.size() - 1)) != 0)
    throw std::invalid_argument("boundary density size must be a power of two");
}

bool BoundaryMeasure::is_zero() const { return total_mass() == 0.0; }

double BoundaryMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.mass;
  if (!density.empty()) {
    double d = 0.0;
    for (double v : density) d += v;
    s += d / static_cast<double>(density.size());
  }
  return s;
}

std::optional<double> BoundaryMeasure::uniform_level() const {
  if (density.empty()) return std::nullopt;
  for (double v : density)
    if (v != density.front()) return std::nullopt;
  return density.front();
}

void SuperharmonicWeight::validate() const {
  mu.validate();
  nu.validate();
}

Extended riesz_moment(const DiscMeasure& mu) {
  double total = 0.0;
  for (const auto& a : mu.atoms) {
    double r = std::abs(a.position);
    total += a.mass * (1.0 - r) * (1.0 + r);
  }
  if (mu.density) {
    const auto& d = *mu.density;
    const auto& g = d.grid;
    const std::size_t per_block = g.radial_size() / (g.block_edges.size() - 1);
    std::vector<double> blocks;
    double block = 0.0;
    for (std::size_t i = 0; i < g.radial_size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < g.angular; ++j) row += d.value(i, j);
      block += g.node_weight(i) * row * g.delta[i] * (2.0 - g.delta[i]);
      if ((i + 1) % per_block == 0) {
        blocks.push_back(block);
        block = 0.0;
      }
    }
    double dens = 0.0;
    for (double b : blocks) dens += b;
    total += dens;
    // Block sums of an integrable density decay geometrically toward the
    // boundary; the fitted ratio gives the tail beyond the last block, and a
    // ratio of 1 or more means the truncation hides divergence.
    if (blocks.size() >= 4) {
      const double last = blocks.back(), prev = blocks[blocks.size() - 2];
      if (last > 1e-15 * std::max(dens, 1e-300)) {
        const double q = last / prev;
        if (!(q < 1.0)) return Extended::diverged(total);
        total += last * q / (1.0 - q);
      }
    }
  }
  return capped(total);
}

double standard_alpha_density(double alpha, double delta) {
  double one_minus_r2 = delta * (2.0 - delta);
  double r2 = (1.0 - delta) * (1.0 - delta);
  return alpha * std::pow(one_minus_r2, alpha - 2.0) * (1.0 - alpha * r2);
}

namespace family {

SuperharmonicWeight classical() {
  SuperharmonicWeight w;
  w.nu.density = {1.0};
  return w;
}

DiscMeasure standard_alpha_measure(double alpha, int blocks, int order) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("standard-alpha requires alpha in (0, 1)");
  DiscDensity d;
  d.grid = QuadratureGrid::dyadic(blocks, order, 1);
  d.values.resize(d.grid.size());
  for (std::size_t i = 0; i < d.grid.radial_size(); ++i)
    d.values[i] = standard_alpha_density(alpha, d.grid.delta[i]);
  d.radial = [alpha](double delta) { return standard_alpha_density(alpha, delta); };
  DiscMeasure mu;
  mu.density = std::move(d);
  return mu;
}

SuperharmonicWeight standard_alpha(double alpha, int blocks, int order) {
  SuperharmonicWeight w;
  w.mu = standard_alpha_measure(alpha, blocks, order);
  return w;
}

SuperharmonicWeight point_mass_harmonic(double angle, double mass) {
  SuperharmonicWeight w;
  w.nu.atoms.push_back({angle, mass});
  return w;
}

SuperharmonicWeight atomic(std::vector<DiscAtom> atoms) {
  SuperharmonicWeight w;
  w.mu.atoms = std::move(atoms);
  return w;
}

DiscMeasure designed_atomic(double angle, int terms) {
  DiscMeasure mu;
  for (int j = 1; j <= terms; ++j)
    mu.atoms.push_back({std::polar(1.0 - std::ldexp(1.0, -j), angle), double(j) * j});
  return mu;
}

}  // namespace family

}  // namespace wds
