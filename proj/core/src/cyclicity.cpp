#include "wds/cyclicity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wds/quadrature.hpp"

namespace wds {

namespace {

struct WeightedAtom {
  cplx a;
  double mass;
};

// (g - g(a)) / (z - a) on coefficients: s_k = g_{k+1} + a s_{k+1}.
Eigen::MatrixXcd difference_quotient(const Eigen::MatrixXcd& v, cplx a) {
  const Eigen::Index len = v.rows();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(len, v.cols());
  for (Eigen::Index k = len - 2; k >= 0; --k) s.row(k) = v.row(k + 1) + a * s.row(k + 1);
  return s;
}

// Diagonal weights 1 + lambda_m + c m and the atoms of the norm.
void norm_data(const SuperharmonicWeight& w, Eigen::Index len, Eigen::VectorXd& diag,
               std::vector<WeightedAtom>& atoms) {
  diag = Eigen::VectorXd::Ones(len);
  for (const auto& a : w.mu.atoms)
    if (a.mass > 0.0) atoms.push_back({a.position, a.mass * (1.0 - std::norm(a.position))});
  if (w.mu.density) {
    const auto& d = *w.mu.density;
    if (d.angle_free()) {
      // D_mu(z^m) = int (1 - r^{2m}) d mu for a rotation-invariant mu.
      const auto& g = d.grid;
      for (std::size_t i = 0; i < g.radial_size(); ++i) {
        const double mass = g.node_weight(i) * d.value(i);
        const double log_r = std::log1p(-g.delta[i]);
        for (Eigen::Index m = 1; m < len; ++m)
          diag(m) += mass * -std::expm1(2.0 * static_cast<double>(m) * log_r);
      }
    } else {
      for (const auto& a : w.mu.density_atoms())
        atoms.push_back({a.position, a.mass * (1.0 - std::norm(a.position))});
    }
  }
  for (const auto& a : w.nu.atoms)
    if (a.mass > 0.0) atoms.push_back({std::polar(1.0, a.angle), a.mass});
  if (auto level = w.nu.uniform_level()) {
    for (Eigen::Index m = 1; m < len; ++m) diag(m) += *level * static_cast<double>(m);
  } else if (!w.nu.density.empty()) {
    const std::size_t n = w.nu.density.size();
    for (std::size_t k = 0; k < n; ++k)
      if (w.nu.density[k] > 0.0)
        atoms.push_back({std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n)),
                         w.nu.density[k] / static_cast<double>(n)});
  }
}

}  // namespace

Eigen::MatrixXcd cyclic_gram(const HardyFunction& f, const SuperharmonicWeight& w, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  const cvec& a = f.coefficients();
  const Eigen::Index k = static_cast<Eigen::Index>(a.size());
  const Eigen::Index len = k + n;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(len, n + 1);
  for (Eigen::Index j = 0; j <= n; ++j)
    for (Eigen::Index m = 0; m < k; ++m) v(m + j, j) = a[static_cast<std::size_t>(m)];
  Eigen::VectorXd diag;
  std::vector<WeightedAtom> atoms;
  norm_data(w, len, diag, atoms);
  Eigen::MatrixXcd g = v.adjoint() * diag.asDiagonal() * v;
  for (const auto& at : atoms) {
    Eigen::MatrixXcd q = difference_quotient(v, at.a);
    g.noalias() += at.mass * (q.adjoint() * q);
  }
  return 0.5 * (g + g.adjoint().eval());
}

DistanceCurve cyclic_distance(const HardyFunction& f, const SuperharmonicWeight& w, int n) {
  DistanceCurve curve;
  Eigen::MatrixXcd g = cyclic_gram(f, w, n);
  curve.ridge = kRidge * g.trace().real();
  const cplx a0 = f.coefficients().empty() ? cplx(0.0) : f.coefficients()[0];
  // Leading blocks of the ridged Gram share the leading block of its
  // Cholesky factor, so d(k)^2 = 1 - sum_{j <= k} |y_j|^2 with y = L^-1 b.
  // Accumulating the sum keeps the curve nonincreasing in floating point.
  Eigen::MatrixXcd ridged = g;
  ridged.diagonal().array() += curve.ridge;
  const Eigen::LLT<Eigen::MatrixXcd> llt(ridged);
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(g.rows());
  y(0) = std::conj(a0);
  llt.matrixL().solveInPlace(y);
  double captured = 0.0;
  for (int k = 0; k <= n; ++k) {
    const Eigen::Index size = k + 1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g.topLeftCorner(size, size),
                                                        Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff(), hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > kGramConditionCap) {
      curve.truncated_at = k;
      curve.diagnostic = "Gram condition number exceeds cap at degree " + std::to_string(k);
      break;
    }
    captured += std::norm(y(k));
    curve.d.push_back(std::sqrt(std::max(1.0 - captured, 0.0)));
  }
  return curve;
}

std::string to_string(Th4Verdict v) {
  switch (v) {
    case Th4Verdict::Met: return "met";
    case Th4Verdict::NotMet: return "not-met";
    default: return "inconclusive";
  }
}

Th4Report th4_test(const CapacitySweep& sweep) {
  Th4Report rep;
  rep.condition = condition_c(sweep, [](double t) { return -std::log(t); });
  switch (rep.condition.series.verdict) {
    case SeriesVerdict::Finite: rep.verdict = Th4Verdict::Met; break;
    case SeriesVerdict::Divergent: rep.verdict = Th4Verdict::NotMet; break;
    default: rep.verdict = Th4Verdict::Inconclusive;
  }
  return rep;
}

std::string to_string(DAlphaVerdict v) {
  switch (v) {
    case DAlphaVerdict::Cyclic: return "cyclic";
    case DAlphaVerdict::NoVerdict: return "no-verdict";
    default: return "inconclusive";
  }
}

DAlphaReport dalpha_test(const BoundarySet& e, double alpha, double gamma, int levels) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  DAlphaReport rep;
  if (e.is_empty()) {
    rep.verdict = DAlphaVerdict::Cyclic;
    rep.gamma_ok = true;
    return rep;
  }
  for (int j = 0; j <= levels; ++j) {
    const double t = kPi * std::ldexp(1.0, -j);
    if (t < e.resolution()) break;
    rep.t.push_back(t);
    rep.neighborhood.push_back(e.neighborhood_measure(t));
  }
  const GaussRule& rule = gauss_legendre(8);
  std::vector<double> inc, ratio_log;
  for (std::size_t j = 0; j + 1 < rep.t.size(); ++j) {
    const double hi = rep.t[j], lo = rep.t[j + 1];
    double s = 0.0;
    for (std::size_t q = 0; q < rule.x.size(); ++q) {
      const double t = lo + 0.5 * (hi - lo) * (rule.x[q] + 1.0);
      s += 0.5 * (hi - lo) * rule.w[q] / (std::pow(t, alpha) * e.neighborhood_measure(t));
    }
    inc.push_back(s);
  }
  for (std::size_t j = 0; j < rep.t.size(); ++j)
    ratio_log.push_back(std::log2(rep.neighborhood[j]) - gamma * std::log2(rep.t[j]));
  rep.integral = series_verdict(inc);
  // Least-squares slope of the ratio over the last window of halvings.
  const std::size_t win = std::min<std::size_t>(kSeriesWindow, ratio_log.size());
  if (win >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = ratio_log.size() - win; i < ratio_log.size(); ++i) {
      const double x = static_cast<double>(i), y = ratio_log[i];
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double wn = static_cast<double>(win);
    rep.gamma_slope = (wn * sxy - sx * sy) / (wn * sxx - sx * sx);
  }
  rep.gamma_ok = win >= 2 && rep.gamma_slope <= kSlopeThreshold;
  if (rep.integral.verdict == SeriesVerdict::Finite)
    rep.verdict = DAlphaVerdict::NoVerdict;
  else if (!rep.gamma_ok)
    rep.verdict = DAlphaVerdict::Inconclusive;
  else if (rep.integral.verdict == SeriesVerdict::Divergent)
    rep.verdict = DAlphaVerdict::Cyclic;
  else
    rep.verdict = DAlphaVerdict::Inconclusive;
  return rep;
}

CandidateReport vanishing_cyclic_candidate(const BoundarySet& e, const CapacitySweep& sweep,
                                           std::size_t n) {
  CandidateReport rep;
  const auto& c = sweep.capacity;
  if (e.is_empty()) {
    rep.refused = true;
    rep.reason = "empty set";
    return rep;
  }
  if (c.size() < 3) {
    rep.refused = true;
    rep.reason = "capacity sweep has fewer than three levels";
    return rep;
  }
  if (c.back() > 0.5 * c[1]) {
    rep.refused = true;
    rep.reason = "capacity sweep does not decay; the set is likely not polar";
    return rep;
  }
  // eta^2 at t_0 = pi is 0; each level adds Delta_j with c_j Delta_j summable.
  rep.eta_squared.assign(c.size(), 0.0);
  for (std::size_t j = 0; j + 1 < c.size(); ++j) {
    const double jj = static_cast<double>(j + 1);
    const double step = c[j] > 0.0 ? std::min(1.0, 1.0 / (std::pow(jj, 1.5) * c[j])) : 1.0;
    rep.eta_squared[j + 1] = rep.eta_squared[j] + step;
  }
  std::vector<double> t(sweep.t.rbegin(), sweep.t.rend());
  std::vector<double> log_phi;
  for (auto it = rep.eta_squared.rbegin(); it != rep.eta_squared.rend(); ++it)
    log_phi.push_back(-std::sqrt(*it));
  const DistanceProfile phi = DistanceProfile::tabulated(t, log_phi);
  try {
    bool isolated = e.arcs().size() > 1;
    for (const Arc& a : e.arcs()) isolated = isolated && a.length == 0.0;
    if (isolated) {
      rep.f = distance_outer(phi, BoundarySet::point(e.arcs()[0].start), n);
      for (std::size_t i = 1; i < e.arcs().size(); ++i)
        rep.f = product(rep.f, distance_outer(phi, BoundarySet::point(e.arcs()[i].start), n));
    } else {
      rep.f = distance_outer(phi, e, n);
    }
  } catch (const std::invalid_argument& ex) {
    rep.refused = true;
    rep.reason = ex.what();
    return rep;
  }
  const std::vector<double> eta2 = rep.eta_squared;
  const std::vector<double> ts = sweep.t;
  rep.condition = condition_c(sweep, [eta2, ts](double x) {
    const auto it = std::find(ts.begin(), ts.end(), x);
    return std::sqrt(eta2[static_cast<std::size_t>(it - ts.begin())]);
  });
  return rep;
}

}  // namespace wds
