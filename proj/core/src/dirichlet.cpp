#include "wds/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "wds/entropy.hpp"
#include "wds/fft.hpp"
#include "wds/parallel.hpp"
#include "wds/potentials.hpp"
#include "wds/quadrature.hpp"
#include "wds/spectral.hpp"

namespace wds {

namespace {

constexpr int kOrder = 16;

std::size_t working_size(const HardyFunction& f, std::size_t n) {
  return std::max(next_pow2(std::max<std::size_t>(n, 8)), f.grid_size());
}

int grading_levels(std::size_t m) { return static_cast<int>(std::log2(static_cast<double>(m))) + 14; }

double node_angle(std::size_t k, std::size_t m) {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(m);
}

// 1 / |zeta_j - zeta_k|^2 on m nodes as a function of j - k; zero at 0.
std::vector<double> circulant_kernel(std::size_t m, double exponent = 2.0) {
  std::vector<double> k(m, 0.0);
  for (std::size_t d = 1; d < m; ++d)
    k[d] = std::pow(std::abs(2.0 * std::sin(kPi * static_cast<double>(d) / static_cast<double>(m))),
                    -exponent);
  return k;
}

double sum_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// Fourier coefficients r_n, n = 0..L-1, of |sum_k d_k s^k e^{ikt}|^2.
cvec autocorrelation(const cvec& d, double log_s) {
  const std::size_t l = d.size();
  const std::size_t p = next_pow2(2 * l);
  cvec x(p, 0.0);
  for (std::size_t k = 0; k < l; ++k) x[k] = d[k] * std::exp(static_cast<double>(k) * log_s);
  cvec big = fft(x);
  for (auto& v : big) v = std::norm(v);
  cvec r = ifft(big);
  cvec out(l);
  for (std::size_t n = 0; n < l; ++n) out[n] = r[n] / static_cast<double>(p);
  return out;
}

// Disc atoms seen by every route: explicit atoms plus the nodes of a
// density that is not angle-free.
std::vector<DiscAtom> disc_atoms(const DiscMeasure& mu) {
  std::vector<DiscAtom> a = mu.atoms;
  if (mu.density && !mu.density->angle_free()) {
    auto extra = mu.density_atoms();
    a.insert(a.end(), extra.begin(), extra.end());
  }
  return a;
}

const DiscDensity* radial_density(const DiscMeasure& mu) {
  if (mu.density && mu.density->angle_free()) return &*mu.density;
  return nullptr;
}

PotentialEvaluator radial_evaluator(const DiscDensity& d) {
  SuperharmonicWeight w;
  w.mu.density = d;
  return PotentialEvaluator(std::move(w));
}

std::vector<double> density_on_grid(const BoundaryMeasure& nu, std::size_t m) {
  if (nu.density.size() > m) throw std::invalid_argument("boundary density is finer than the working grid");
  return trig_resample(nu.density, m);
}

// D_{zeta_j}(f) at every node by the trapezoid rule with diagonal |f'|^2,
// using circulant convolutions.
std::vector<double> douglas_node_values(const cvec& b, const cvec& fp) {
  const std::size_t m = b.size();
  std::vector<double> kern = circulant_kernel(m);
  cvec kh = fft(cvec(kern.begin(), kern.end()));
  cvec b2(m);
  for (std::size_t j = 0; j < m; ++j) b2[j] = std::norm(b[j]);
  auto conv = [&](cvec x) {
    cvec xh = fft(x);
    for (std::size_t j = 0; j < m; ++j) xh[j] *= kh[j] / static_cast<double>(m);
    return ifft(xh);
  };
  cvec a = conv(b2), c = conv(b);
  const double sk = sum_of(kern);
  std::vector<double> d(m);
  for (std::size_t j = 0; j < m; ++j)
    d[j] = std::max(0.0, (a[j].real() - 2.0 * (std::conj(b[j]) * c[j]).real() + b2[j].real() * sk +
                          std::norm(fp[j])) /
                             static_cast<double>(m));
  return d;
}

// Index of the node at `angle`, or m when the angle is off the grid.
std::size_t node_index(double angle, std::size_t m) {
  double x = angle / kTwoPi * static_cast<double>(m);
  double r = std::round(x);
  if (std::abs(x - r) > 1e-9) return m;
  long k = static_cast<long>(r) % static_cast<long>(m);
  return static_cast<std::size_t>(k < 0 ? k + static_cast<long>(m) : k);
}

double douglas_at(const HardyFunction& f, const cvec& b, const cvec& fp, double angle, double bd) {
  const std::size_t m = b.size();
  const std::size_t k0 = node_index(angle, m);
  const cplx fz = k0 < m ? b[k0] : f(std::polar(1.0 - bd, angle));
  double s = k0 < m ? std::norm(fp[k0]) : 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (k == k0) continue;
    double sn = std::sin(0.5 * (node_angle(k, m) - angle));
    s += std::norm(b[k] - fz) / (4.0 * sn * sn);
  }
  return s / static_cast<double>(m);
}

// Tangential derivative of log|f| from z (log f)'(z).
std::vector<double> tangential(const cvec& zlog) {
  std::vector<double> out(zlog.size());
  for (std::size_t k = 0; k < zlog.size(); ++k) out[k] = -zlog[k].imag();
  return out;
}

double richter_sundberg_at(const HardyFunction& f, const std::vector<double>& h,
                           const std::vector<double>& hp, double angle, double bd) {
  const std::size_t m = h.size();
  const std::size_t k0 = node_index(angle, m);
  double hz, hpz;
  if (k0 < m) {
    hz = h[k0];
    hpz = hp[k0];
  } else {
    cplx z = std::polar(1.0 - bd, angle);
    hz = f.outer().log_value(z).real();
    const cvec& c = f.outer().log_coefficients();
    cvec d(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) d[n] = static_cast<double>(n) * c[n];
    hpz = -horner(d, z).imag();
  }
  double s = 2.0 * std::exp(2.0 * hz) * hpz * hpz;
  for (std::size_t k = 0; k < m; ++k) {
    if (k == k0) continue;
    double sn = std::sin(0.5 * (node_angle(k, m) - angle));
    s += bregman_f(2.0 * h[k], 2.0 * hz) / (4.0 * sn * sn);
  }
  return s / static_cast<double>(m);
}

}  // namespace

Extended dirichlet_area(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n) {
  const std::size_t m = working_size(f, n);
  const cvec d = f.derivative_coefficients();
  const std::size_t l = d.size();
  const int levels = grading_levels(m);
  const DiscDensity* radial = radial_density(w.mu);
  const auto uniform = w.nu.uniform_level();
  cvec nu_hat;
  if (!w.nu.density.empty() && !uniform) nu_hat = fourier_coefficients(w.nu.density);
  const bool spectrum = !w.nu.atoms.empty() || !nu_hat.empty();
  double total = 0.0;

  if (!w.nu.is_zero() || radial) {
    auto rule = graded_rule(0.0, 1.0, false, true, levels, kOrder);
    std::optional<PotentialEvaluator> rad;
    if (radial) rad.emplace(radial_evaluator(*radial));
    std::vector<double> vals(rule.size());
    parallel_for(rule.size(), [&](std::size_t i) {
      const double s = rule[i].x, delta = rule[i].from_b;
      const double log_s = std::log1p(-delta);
      double g0 = 0.0;
      cvec r;
      if (spectrum) {
        r = autocorrelation(d, log_s);
        g0 = r[0].real();
      } else {
        for (std::size_t k = 0; k < l; ++k)
          g0 += std::norm(d[k]) * std::exp(2.0 * static_cast<double>(k) * log_s);
      }
      double v = 0.0;
      if (uniform) v += *uniform * g0;
      if (!nu_hat.empty()) {
        const std::size_t nn = nu_hat.size();
        v += g0 * nu_hat[0].real();
        for (std::size_t k = 1; k < std::min(l, nn / 2); ++k)
          v += 2.0 * std::exp(static_cast<double>(k) * log_s) * (r[k] * std::conj(nu_hat[k])).real();
        if (nn >= 2 && nn / 2 < l)
          v += std::exp(static_cast<double>(nn / 2) * log_s) * r[nn / 2].real() * nu_hat[nn / 2].real();
      }
      for (const auto& a : w.nu.atoms) {
        double p = r[0].real();
        for (std::size_t k = 1; k < l; ++k)
          p += 2.0 * std::exp(static_cast<double>(k) * log_s) *
               (r[k] * std::polar(1.0, static_cast<double>(k) * a.angle)).real();
        v += a.mass * p;
      }
      if (rad) v += g0 * rad->green(Polar{delta, 0.0}).value;
      vals[i] = rule[i].w * 2.0 * s * v;
    });
    total += sum_of(vals);
  }

  for (const auto& atom : disc_atoms(w.mu)) {
    if (atom.mass == 0.0) continue;
    const Polar pw = Polar::from(atom.position);
    const double sigma = pw.r();
    const double log_sigma = std::log1p(-pw.delta);
    struct Node {
      LineNode node;
      bool inside;  // s < sigma
    };
    std::vector<Node> nodes;
    if (sigma > 0.0) {
      for (const auto& nd : graded_rule(0.0, sigma, true, true, levels, kOrder)) nodes.push_back({nd, true});
      for (const auto& nd : graded_rule(sigma, 1.0, true, true, levels, kOrder)) nodes.push_back({nd, false});
    } else {
      for (const auto& nd : graded_rule(0.0, 1.0, true, true, levels, kOrder)) nodes.push_back({nd, false});
    }
    std::vector<double> vals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
      const auto& nd = nodes[i].node;
      const double s = nd.x;
      // Logs are formed from endpoint distances, never from s itself.
      double log_s, log_big, log_ratio;  // log max(s, sigma), log(min / max)
      if (nodes[i].inside) {
        log_ratio = std::log1p(-nd.from_b / sigma);
        log_s = log_sigma + log_ratio;
        log_big = log_sigma;
      } else {
        log_s = std::log1p(-nd.from_b);
        log_big = log_s;
        log_ratio = sigma > 0.0 ? std::log1p(-nd.from_a / s) : -kInf;
      }
      const double log_prod = log_s + log_sigma;
      cvec r = autocorrelation(d, log_s);
      double v = -2.0 * log_big * r[0].real();
      for (std::size_t k = 1; k < l; ++k) {
        double kk = static_cast<double>(k);
        double coef = (2.0 / kk) * (std::exp(kk * log_ratio) - std::exp(kk * log_prod));
        v += coef * (r[k] * std::polar(1.0, kk * pw.angle)).real();
      }
      vals[i] = nd.w * 2.0 * s * v;
    });
    total += atom.mass * sum_of(vals);
  }
  return capped(total);
}

Extended dirichlet_local(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n) {
  const std::size_t m = working_size(f, n);
  const double bd = boundary_delta(m);
  double total = 0.0;
  if (!w.nu.is_zero()) {
    const cvec b = f.circle_values(bd, m);
    const cvec fp = f.derivative_circle_values(bd, m);
    if (!w.nu.density.empty()) {
      auto dj = douglas_node_values(b, fp);
      auto nu = density_on_grid(w.nu, m);
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += nu[j] * dj[j];
      total += s / static_cast<double>(m);
    }
    for (const auto& a : w.nu.atoms) total += a.mass * douglas_at(f, b, fp, a.angle, bd);
  }
  for (const auto& atom : disc_atoms(w.mu)) {
    if (atom.mass == 0.0) continue;
    auto loc = local_dirichlet_interior(f, atom.position, m);
    const double r = std::abs(atom.position);
    total += atom.mass * (1.0 - r) * (1.0 + r) * loc.douglas.value;
  }
  if (const DiscDensity* radial = radial_density(w.mu)) {
    const cvec& a = f.coefficients();
    const auto& g = radial->grid;
    std::vector<double> vals(g.radial_size());
    parallel_for(g.radial_size(), [&](std::size_t i) {
      const double lr = std::log1p(-g.delta[i]);
      double s = 0.0;
      for (std::size_t k = 1; k < a.size(); ++k)
        s += std::norm(a[k]) * -std::expm1(2.0 * static_cast<double>(k) * lr);
      vals[i] = g.radial_weight[i] * radial->values[i] * s;
    });
    total += sum_of(vals);
  }
  return capped(total);
}

Extended dirichlet_entropy(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n,
                           bool inf_form) {
  if (!f.is_outer()) throw std::invalid_argument("entropy route requires an outer function");
  const OuterFunction& F = f.outer();
  const std::size_t m = working_size(f, n);
  const double bd = boundary_delta(m);
  double total = 0.0;
  if (!w.nu.is_zero()) {
    const auto h = F.circle_log_modulus(bd, m);
    const auto hp = tangential(f.log_derivative_circle(bd, m));
    if (!w.nu.density.empty()) {
      auto nu = density_on_grid(w.nu, m);
      auto kern = circulant_kernel(m);
      std::vector<double> vals(m);
      parallel_for(m, [&](std::size_t j) {
        if (nu[j] == 0.0) return;
        double s = 2.0 * std::exp(2.0 * h[j]) * hp[j] * hp[j];
        for (std::size_t k = 0; k < m; ++k)
          if (k != j) s += bregman_f(2.0 * h[k], 2.0 * h[j]) * kern[(k + m - j) % m];
        vals[j] = nu[j] * s / static_cast<double>(m);
      });
      total += sum_of(vals) / static_cast<double>(m);
    }
    for (const auto& a : w.nu.atoms) total += a.mass * richter_sundberg_at(f, h, hp, a.angle, bd);
  }
  for (const auto& atom : disc_atoms(w.mu)) {
    if (atom.mass == 0.0) continue;
    const std::size_t mm = LocalMeasure::node_count(atom.position, m);
    auto sigma = LocalMeasure::make(atom.position, mm);
    const double mass = sigma.mass();
    for (double& v : sigma.weights) v /= mass;
    auto u = F.circle_log_modulus(bd, mm);
    for (double& v : u) v *= 2.0;
    total += atom.mass * (inf_form ? phi_entropy_inf(sigma.weights, u) : phi_entropy(sigma.weights, u));
  }
  if (const DiscDensity* radial = radial_density(w.mu)) {
    const std::size_t m2 = 2 * m;
    const auto h = F.circle_log_modulus(bd, m2);
    const cvec zlog = f.log_derivative_circle(bd, m2);
    double e2 = 0.0, slope = 0.0;
    for (std::size_t k = 0; k < m2; ++k) {
      double e = std::exp(2.0 * h[k]);
      e2 += e;
      slope += 2.0 * e * zlog[k].real();
    }
    e2 /= static_cast<double>(m2);
    slope /= static_cast<double>(m2);
    const auto& g = radial->grid;
    std::vector<double> vals(g.radial_size());
    parallel_for(g.radial_size(), [&](std::size_t i) {
      const double d = g.delta[i];
      double v;
      if (d < 1e-7) {
        v = slope * d;
      } else {
        auto hi = F.circle_log_modulus(bd + d - bd * d, m2);
        double s = 0.0;
        for (double x : hi) s += std::exp(2.0 * x);
        v = e2 - s / static_cast<double>(m2);
      }
      vals[i] = g.radial_weight[i] * radial->values[i] * v;
    });
    total += sum_of(vals);
  }
  return capped(total);
}

RouteValues dirichlet(const HardyFunction& f, const SuperharmonicWeight& w, const DirichletOptions& opt) {
  RouteValues r;
  r.area = dirichlet_area(f, w, opt.n);
  r.local = dirichlet_local(f, w, opt.n);
  r.entropy_applicable = f.is_outer();
  if (r.entropy_applicable) r.entropy = dirichlet_entropy(f, w, opt.n, opt.inf_form);
  return r;
}

Extended douglas_type_form(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n) {
  const std::size_t m = working_size(f, n);
  const double bd = boundary_delta(m);
  double total = 0.0;
  const bool need_boundary = !w.nu.is_zero() || radial_density(w.mu);
  cvec b, fp;
  if (need_boundary) {
    b = f.circle_values(bd, m);
    fp = f.derivative_circle_values(bd, m);
  }
  if (!w.nu.density.empty()) {
    auto nu = density_on_grid(w.nu, m);
    auto kern = circulant_kernel(m);
    std::vector<double> vals(m);
    parallel_for(m, [&](std::size_t j) {
      double s = std::norm(fp[j]);
      for (std::size_t k = 0; k < m; ++k)
        if (k != j) s += std::norm(b[j] - b[k]) * kern[(k + m - j) % m];
      vals[j] = nu[j] * s;
    });
    total += sum_of(vals) / (static_cast<double>(m) * static_cast<double>(m));
  }
  for (const auto& a : w.nu.atoms) total += a.mass * douglas_at(f, b, fp, a.angle, bd);

  for (const auto& atom : disc_atoms(w.mu)) {
    if (atom.mass == 0.0) continue;
    const std::size_t mm = LocalMeasure::node_count(atom.position, m);
    auto sigma = LocalMeasure::make(atom.position, mm);
    const cvec v = f.circle_values(bd, mm);
    double sp = 0.0, sq = 0.0;
    cplx sf = 0.0;
    for (std::size_t k = 0; k < mm; ++k) {
      sp += sigma.weights[k];
      sq += sigma.weights[k] * std::norm(v[k]);
      sf += sigma.weights[k] * v[k];
    }
    // (1/2) sum_{j,k} p_j p_k |f_j - f_k|^2 = sp sq - |sf|^2
    total += kDouglasCalibration * 2.0 * atom.mass * (sp * sq - std::norm(sf));
  }

  if (const DiscDensity* radial = radial_density(w.mu)) {
    auto rad = radial_evaluator(*radial);
    cvec bh = fft(b);
    for (auto& x : bh) x = std::norm(x);
    // corr[d] = m sum_j b_{j+d} conj(b_j); S(d) = mean_j |b_j - b_{j+d}|^2.
    cvec corr = ifft(bh);
    const double r0 = corr[0].real();
    std::vector<double> vals(m / 2 + 1, 0.0);
    std::atomic<bool> infinite{false};
    parallel_for(m / 2 + 1, [&](std::size_t d) {
      if (d == 0) return;
      Extended a = rad.a_mu(0.0, node_angle(d, m));
      if (a.infinite) infinite.store(true);
      double sd = 2.0 * (r0 - corr[d].real()) / (static_cast<double>(m) * static_cast<double>(m));
      double weight = (d == m / 2) ? 1.0 : 2.0;
      vals[d] = weight * a.value * sd;
    });
    if (infinite) return Extended::diverged(total + sum_of(vals));
    total += kDouglasCalibration * sum_of(vals) / static_cast<double>(m);
  }
  return capped(total);
}

LocalValues local_dirichlet_interior(const HardyFunction& f, cplx w, std::size_t n) {
  const std::size_t m0 = working_size(f, n);
  const double bd = boundary_delta(m0);
  const std::size_t m = LocalMeasure::node_count(w, m0);
  const cvec b = f.circle_values(bd, m);
  const cplx fw = f(w);
  double s = 0.0;
  for (std::size_t k = 0; k < m; ++k) s += std::norm(b[k] - fw) / std::norm(std::polar(1.0, node_angle(k, m)) - w);
  LocalValues out;
  out.douglas = capped(s / static_cast<double>(m));
  out.outer_applicable = f.is_outer();
  if (out.outer_applicable) {
    auto sigma = LocalMeasure::make(w, m);
    const double mass = sigma.mass();
    for (double& v : sigma.weights) v /= mass;
    auto u = f.outer().circle_log_modulus(bd, m);
    for (double& v : u) v *= 2.0;
    const double r = std::abs(w);
    out.outer = capped(phi_entropy(sigma.weights, u) / ((1.0 - r) * (1.0 + r)));
  }
  return out;
}

LocalValues local_dirichlet_boundary(const HardyFunction& f, double angle, std::size_t n) {
  const std::size_t m = working_size(f, n);
  const double bd = boundary_delta(m);
  const cvec b = f.circle_values(bd, m);
  const cvec fp = f.derivative_circle_values(bd, m);
  LocalValues out;
  out.douglas = capped(douglas_at(f, b, fp, angle, bd));
  out.outer_applicable = f.is_outer();
  if (out.outer_applicable) {
    const auto h = f.outer().circle_log_modulus(bd, m);
    const auto hp = tangential(f.log_derivative_circle(bd, m));
    out.outer = capped(richter_sundberg_at(f, h, hp, angle, bd));
  }
  return out;
}

Extended carleson_type_bound(const HardyFunction& f, double alpha, std::size_t n) {
  if (!f.is_outer()) throw std::invalid_argument("carleson_type_bound requires an outer function");
  const std::size_t m = working_size(f, n);
  const auto h = f.outer().circle_log_modulus(boundary_delta(m), m);
  std::vector<double> e(m);
  for (std::size_t k = 0; k < m; ++k) e[k] = std::exp(2.0 * h[k]);
  const auto kern = circulant_kernel(m, 2.0 - alpha);
  std::vector<double> vals(m);
  parallel_for(m, [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) s += (e[j] - e[k]) * (h[j] - h[k]) * kern[(k + m - j) % m];
    vals[j] = s;
  });
  return capped(sum_of(vals) / (static_cast<double>(m) * static_cast<double>(m)));
}

double ne_bound(const DistanceProfile& phi, double zeta_angle, const DiscMeasure& mu, int levels) {
  SuperharmonicWeight w;
  w.mu = mu;
  PotentialEvaluator pe(std::move(w));
  double sup_df = 0.0, sup_phi = 0.0;
  for (int k = 0; k <= levels; ++k) {
    double y = std::ldexp(kPi, -k);
    sup_df = std::max(sup_df, std::abs(phi.derivative(y)) * pe.f_mu_profile(y, zeta_angle));
    sup_phi = std::max(sup_phi, phi(y));
  }
  return sup_df * sup_phi;
}

double elementary_integral_ratio(const DistanceProfile& phi, int levels) {
  const GaussRule& g = gauss_legendre(kOrder);
  double inner_base = 0.0;  // int_{x_min}^{lo} phi
  double total = 0.0, sup_phi = 0.0;
  for (int k = levels - 1; k >= 0; --k) {
    const double lo = std::ldexp(kPi, -k - 1), hi = std::ldexp(kPi, -k);
    sup_phi = std::max({sup_phi, phi(lo), phi(hi)});
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < g.x.size(); ++q) {
      const double x = mid + half * g.x[q];
      const double m2 = 0.5 * (lo + x), h2 = 0.5 * (x - lo);
      double inner = inner_base;
      for (std::size_t p = 0; p < g.x.size(); ++p) inner += h2 * g.w[p] * phi(m2 + h2 * g.x[p]);
      total += half * g.w[q] * std::abs(phi.derivative(x)) / (x * phi(x)) * inner;
    }
    for (std::size_t q = 0; q < g.x.size(); ++q) inner_base += half * g.w[q] * phi(mid + half * g.x[q]);
  }
  return total / sup_phi;
}

}  // namespace wds
