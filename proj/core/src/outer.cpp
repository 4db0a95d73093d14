#include "wds/outer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wds/fft.hpp"
#include "wds/spectral.hpp"

namespace wds {

namespace {

// Fits h(t_k + j dt) = s log|2 sin(j dt / 2)| + c + m j on the two nearest
// finite nodes on each side and returns c - s log N, the sample for which
// the trapezoid sum of the singular term is exact.
double corrected_zero(const std::vector<double>& h, std::size_t k) {
  const std::size_t n = h.size();
  const double dt = kTwoPi / static_cast<double>(n);
  Eigen::Matrix<double, 4, 3> a;
  Eigen::Vector4d rhs;
  int row = 0;
  for (int side : {-1, 1}) {
    int found = 0;
    for (std::size_t j = 1; j < n / 2 && found < 2; ++j) {
      std::size_t idx = (k + n + side * static_cast<long>(j)) % n;
      if (!std::isfinite(h[idx])) continue;
      double off = side * static_cast<double>(j);
      a(row, 0) = std::log(std::abs(2.0 * std::sin(0.5 * off * dt)));
      a(row, 1) = 1.0;
      a(row, 2) = off;
      rhs(row) = h[idx];
      ++row;
      ++found;
    }
  }
  if (row < 4) throw std::invalid_argument("log modulus has too few finite samples");
  Eigen::Vector3d x = a.colPivHouseholderQr().solve(rhs);
  return x(1) - x(0) * std::log(static_cast<double>(n));
}

}  // namespace

BoundaryLogModulus::BoundaryLogModulus(std::vector<double> samples) : raw_(std::move(samples)) {
  const std::size_t n = raw_.size();
  if (n == 0 || !is_pow2(n)) throw std::invalid_argument("log modulus grid size must be a power of two");
  for (std::size_t k = 0; k < n; ++k) {
    double v = raw_[k];
    if (std::isnan(v) || v == kInf) throw std::invalid_argument("log modulus samples must be < +infinity");
    if (v == -kInf) zeros_.push_back(k);
  }
  if (static_cast<double>(zeros_.size()) > std::sqrt(static_cast<double>(n)))
    throw std::invalid_argument("log modulus has more than sqrt(N) zero nodes");
  if (n < 8 && !zeros_.empty()) throw std::invalid_argument("zero nodes need N >= 8");
  corrected_ = raw_;
  for (std::size_t k : zeros_) corrected_[k] = corrected_zero(raw_, k);
  double s = 0.0, abs_sum = 0.0;
  for (double v : corrected_) {
    s += v;
    abs_sum += std::abs(v);
  }
  if (!(abs_sum / static_cast<double>(n) < kDivergenceCap))
    throw std::invalid_argument("log modulus is not integrable");
  mean_ = s / static_cast<double>(n);
}

BoundaryLogModulus BoundaryLogModulus::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open boundary data file: " + path);
  std::vector<double> angles, values;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::string a, v;
    ss >> a >> v;
    try {
      std::size_t pa = 0, pv = 0;
      double x = std::stod(a, &pa), y = std::stod(v, &pv);
      if (pa != a.size() || pv != v.size()) throw std::invalid_argument("");
      angles.push_back(x);
      values.push_back(y);
    } catch (const std::exception&) {
      if (angles.empty()) continue;  // header row
      throw std::invalid_argument("malformed boundary data row: " + line);
    }
  }
  const std::size_t n = values.size();
  for (std::size_t k = 0; k < n; ++k) {
    double expect = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    if (std::abs(angles[k] - expect) > 1e-9 * kTwoPi)
      throw std::invalid_argument("boundary data must sit on the uniform grid 2 pi k / N");
  }
  return BoundaryLogModulus(std::move(values));
}

OuterFunction::OuterFunction(BoundaryLogModulus h) : h_(std::move(h)) {
  c_ = herglotz_coefficients(h_.corrected());
}

cplx OuterFunction::log_value(cplx z) const { return horner(c_, z); }

cplx OuterFunction::operator()(cplx z) const { return std::exp(log_value(z)); }

cvec OuterFunction::circle_values(double delta, std::size_t m) const {
  cvec v = wds::circle_values(c_, delta, m);
  for (auto& x : v) x = std::exp(x);
  return v;
}

std::vector<double> OuterFunction::circle_log_modulus(double delta, std::size_t m) const {
  cvec v = wds::circle_values(c_, delta, m);
  std::vector<double> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = v[k].real();
  return out;
}

cvec OuterFunction::taylor_coefficients(std::size_t count) const {
  std::size_t m = std::max(next_pow2(4 * count), next_pow2(c_.size()));
  cvec v = circle_values(0.0, m);
  cvec hat = fft(v);
  cvec a(count);
  for (std::size_t n = 0; n < count; ++n) a[n] = hat[n] / static_cast<double>(m);
  return a;
}

OuterFunction outer_from_log_modulus(std::vector<double> h) {
  return OuterFunction(BoundaryLogModulus(std::move(h)));
}

namespace {

template <class Op>
OuterFunction combine(const OuterFunction& f, const OuterFunction& g, Op op) {
  const auto& a = f.log_modulus().samples();
  const auto& b = g.log_modulus().samples();
  if (a.size() != b.size()) throw std::invalid_argument("outer functions live on different grids");
  std::vector<double> h(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) h[k] = op(a[k], b[k]);
  return outer_from_log_modulus(std::move(h));
}

}  // namespace

OuterFunction cutoff_min(const OuterFunction& f, const OuterFunction& g) {
  return combine(f, g, [](double x, double y) { return std::min(x, y); });
}

OuterFunction cutoff_max(const OuterFunction& f, const OuterFunction& g) {
  return combine(f, g, [](double x, double y) { return std::max(x, y); });
}

OuterFunction product(const OuterFunction& f, const OuterFunction& g) {
  return combine(f, g, [](double x, double y) { return x + y; });
}

OuterFunction wedge_square(const OuterFunction& f) {
  std::vector<double> h = f.log_modulus().samples();
  for (double& v : h) v = std::min(v, 2.0 * v);
  return outer_from_log_modulus(std::move(h));
}

OuterFunction distance_outer(const DistanceProfile& phi, const BoundarySet& e, std::size_t n) {
  if (e.is_empty()) return outer_from_log_modulus(std::vector<double>(n, phi.log_value(kPi)));
  double at_zero = phi.log_value(0.0);
  if (at_zero == -kInf && e.measure() > 0.0)
    throw std::invalid_argument("profile vanishing at 0 needs a boundary set of zero length");
  const double floor_t = 2.0 * std::sin(0.5 * kPi / static_cast<double>(n));
  std::vector<double> h(n);
  for (std::size_t k = 0; k < n; ++k) {
    double d = e.distance(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    if (d > 0.0)
      h[k] = phi.log_value(std::min(d, kPi));
    else
      h[k] = at_zero == kInf ? phi.log_value(floor_t) : at_zero;
  }
  return outer_from_log_modulus(std::move(h));
}

std::pair<OuterFunction, OuterFunction> arc_localize(const OuterFunction& f, double a, double b) {
  if (!(b > a) || !(b - a < kTwoPi)) throw std::invalid_argument("arc_localize needs 0 < b - a < 2 pi");
  const auto& h = f.log_modulus().samples();
  const std::size_t n = h.size();
  std::vector<double> in(n), out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    // |e^{it} - e^{ia}| = 2 |sin((t - a) / 2)|
    double la = std::log(std::abs(2.0 * std::sin(0.5 * (t - a))));
    double lb = std::log(std::abs(2.0 * std::sin(0.5 * (t - b))));
    double l = la + lb;
    double off = std::fmod(t - a, kTwoPi);
    if (off < 0.0) off += kTwoPi;
    bool inside = off > 0.0 && off < b - a;
    in[k] = inside ? l + h[k] : l;
    out[k] = inside ? l : l + h[k];
  }
  return {outer_from_log_modulus(std::move(in)), outer_from_log_modulus(std::move(out))};
}

}  // namespace wds
