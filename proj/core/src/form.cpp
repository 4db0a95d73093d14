#include "wds/form.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "wds/dirichlet.hpp"
#include "wds/fft.hpp"
#include "wds/parallel.hpp"
#include "wds/potentials.hpp"
#include "wds/quadrature.hpp"
#include "wds/spectral.hpp"

namespace wds {

DirichletFormMatrix::DirichletFormMatrix(Eigen::MatrixXd energy, std::string diagonal_note)
    : energy_(std::move(energy)), note_(std::move(diagonal_note)) {}

Eigen::MatrixXd DirichletFormMatrix::full() const {
  Eigen::MatrixXd q = energy_;
  q.diagonal().array() += l2_weight();
  return q;
}

void DirichletFormMatrix::export_binary(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  const Eigen::MatrixXd q = full();
  const std::uint32_t version = 1;
  const std::uint64_t rows = static_cast<std::uint64_t>(q.rows()), cols = static_cast<std::uint64_t>(q.cols());
  out.write("WDSQ", 4);
  out.write(reinterpret_cast<const char*>(&version), sizeof version);
  out.write(reinterpret_cast<const char*>(&rows), sizeof rows);
  out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      double v = q(i, j);
      out.write(reinterpret_cast<const char*>(&v), sizeof v);
    }
}

std::vector<double> boundary_pair_weights(std::size_t n) {
  const GaussRule& g = gauss_legendre(16);
  const double h = kTwoPi / static_cast<double>(n);
  // kernel in the angular offset x, against dm = dx / (2 pi)
  auto kern = [](double x) {
    double s = std::sin(0.5 * x);
    return 1.0 / (4.0 * s * s) / kTwoPi;
  };
  std::vector<double> w(n, 0.0);
  // Cell [c h, (c + 1) h], c = 0..n-1, with local coordinate tau in [0, 1].
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t q = 0; q < g.x.size(); ++q) {
      const double tau = 0.5 * (1.0 + g.x[q]);
      const double wt = 0.5 * g.w[q] * h;
      const double x = (static_cast<double>(c) + tau) * h;
      if (c == 0) {
        // u(x) - u_0 = tau (u_1 - u_0) exactly on the cells touching node 0.
        w[1] += wt * tau * tau * kern(x);
      } else if (c == n - 1) {
        w[n - 1] += wt * (1.0 - tau) * (1.0 - tau) * kern(x);
      } else {
        const double k = kern(x);
        w[c] += wt * (1.0 - tau) * k;
        w[c + 1] += wt * tau * k;
      }
    }
  }
  return w;
}

DirichletFormMatrix assemble_form(const SuperharmonicWeight& w, std::size_t n) {
  if (!is_pow2(n)) throw std::invalid_argument("assemble_form needs a power-of-two grid");
  const double nn = static_cast<double>(n);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

  // nu part: nodal masses, atoms split between neighbours.
  std::vector<double> mass(n, 0.0);
  if (!w.nu.density.empty()) {
    if (w.nu.density.size() > n) throw std::invalid_argument("boundary density is finer than the form grid");
    auto dens = trig_resample(w.nu.density, n);
    for (std::size_t j = 0; j < n; ++j) mass[j] += dens[j] / nn;
  }
  for (const auto& a : w.nu.atoms) {
    double x = a.angle / kTwoPi * nn;
    double lo = std::floor(x);
    double frac = x - lo;
    if (frac < 1e-9 || frac > 1.0 - 1e-9) {
      mass[static_cast<std::size_t>(std::llround(x)) % n] += a.mass;
    } else {
      std::size_t j = static_cast<std::size_t>(lo) % n;
      mass[j] += a.mass * (1.0 - frac);
      mass[(j + 1) % n] += a.mass * frac;
    }
  }
  bool any_nu = false;
  for (double m : mass) any_nu = any_nu || m != 0.0;
  if (any_nu) {
    auto pw = boundary_pair_weights(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (j != k) s(j, k) += (mass[j] + mass[k]) * pw[(k + n - j) % n];
  }

  // mu part: kCalibration A_mu / N^2 per ordered pair, i.e. twice that per
  // unordered pair weight.
  const double scale = 2.0 * kDouglasCalibration / (nn * nn);
  SuperharmonicWeight atoms_only;
  atoms_only.mu.atoms = w.mu.atoms;
  if (w.mu.density && !w.mu.density->angle_free()) {
    auto extra = w.mu.density_atoms();
    atoms_only.mu.atoms.insert(atoms_only.mu.atoms.end(), extra.begin(), extra.end());
  }
  for (const auto& a : atoms_only.mu.atoms) {
    Eigen::VectorXd p(static_cast<Eigen::Index>(n));
    const double r = std::abs(a.position);
    for (std::size_t j = 0; j < n; ++j)
      p(j) = (1.0 - r) * (1.0 + r) / std::norm(std::polar(1.0, kTwoPi * j / nn) - a.position);
    s.noalias() += (scale * a.mass) * p * p.transpose();
  }
  if (w.mu.density && w.mu.density->angle_free()) {
    SuperharmonicWeight rad;
    rad.mu.density = w.mu.density;
    PotentialEvaluator pe(std::move(rad));
    std::vector<double> a(n, 0.0);
    parallel_for(n / 2, [&](std::size_t i) {
      std::size_t d = i + 1;
      a[d] = pe.a_mu(0.0, kTwoPi * d / nn).value;
    });
    for (std::size_t d = n / 2 + 1; d < n; ++d) a[d] = a[n - d];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (j != k) s(j, k) += scale * a[(k + n - j) % n];
  }
  s.diagonal().setZero();
  // Circulant pieces are symmetric only up to rounding.
  s = 0.5 * (s + s.transpose()).eval();

  Eigen::MatrixXd energy = -s;
  energy.diagonal() = s.rowwise().sum();
  return DirichletFormMatrix(std::move(energy),
                             "graph Laplacian of pair weights; P1 near-cell weight for the boundary kernel");
}

}  // namespace wds
