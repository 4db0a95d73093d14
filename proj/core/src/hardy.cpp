#include "wds/hardy.hpp"

#include <algorithm>

#include "wds/fft.hpp"
#include "wds/spectral.hpp"

namespace wds {

HardyFunction::HardyFunction(cvec coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) a_.push_back(0.0);
  grid_ = std::max<std::size_t>(8, next_pow2(2 * a_.size()));
}

HardyFunction::HardyFunction(const OuterFunction& f)
    : a_(f.taylor_coefficients(std::max<std::size_t>(1, f.size() / 2))),
      grid_(std::max<std::size_t>(8, f.size())),
      outer_(std::make_shared<const OuterFunction>(f)) {}

HardyFunction HardyFunction::monomial(std::size_t n) {
  cvec a(n + 1, 0.0);
  a[n] = 1.0;
  return HardyFunction(std::move(a));
}

HardyFunction HardyFunction::constant(cplx c) { return HardyFunction(cvec{c}); }

cplx HardyFunction::operator()(cplx z) const {
  if (outer_) return (*outer_)(z);
  return horner(a_, z);
}

namespace {

// sum c_n z^n on the circle of radius 1 - delta; coefficients beyond m fold
// onto their residues mod m.
cvec series_on_circle(const cvec& c, double delta, std::size_t m) {
  if (m >= c.size()) return wds::circle_values(c, delta, m);
  cvec folded(m, 0.0);
  for (std::size_t n = 0; n < c.size(); ++n)
    folded[n % m] += c[n] * radius_power(delta, static_cast<double>(n));
  return wds::circle_values(folded, 0.0, m);
}

cvec times_index(const cvec& c) {
  cvec d(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) d[n] = static_cast<double>(n) * c[n];
  return d;
}

}  // namespace

cvec HardyFunction::circle_values(double delta, std::size_t m) const {
  cvec v = series_on_circle(outer_ ? outer_->log_coefficients() : a_, delta, m);
  if (outer_)
    for (auto& x : v) x = std::exp(x);
  return v;
}

cvec HardyFunction::boundary_values(std::size_t m) const { return circle_values(boundary_delta(grid_), m); }

cvec HardyFunction::derivative_coefficients() const {
  cvec d(a_.size() > 1 ? a_.size() - 1 : 1, 0.0);
  for (std::size_t n = 1; n < a_.size(); ++n) d[n - 1] = static_cast<double>(n) * a_[n];
  return d;
}

cplx HardyFunction::derivative(cplx z) const {
  if (!outer_) return horner(derivative_coefficients(), z);
  const cvec& c = outer_->log_coefficients();
  cvec d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
  for (std::size_t n = 1; n < c.size(); ++n) d[n - 1] = static_cast<double>(n) * c[n];
  return (*outer_)(z) * horner(d, z);
}

cvec HardyFunction::derivative_circle_values(double delta, std::size_t m) const {
  if (!outer_) {
    cvec v = series_on_circle(times_index(a_), delta, m);
    // sum n a_n z^n = z f'(z)
    for (std::size_t k = 0; k < m; ++k)
      v[k] /= std::polar(1.0 - delta, kTwoPi * static_cast<double>(k) / static_cast<double>(m));
    return v;
  }
  cvec f = circle_values(delta, m);
  cvec g = log_derivative_circle(delta, m);
  for (std::size_t k = 0; k < m; ++k)
    f[k] *= g[k] / std::polar(1.0 - delta, kTwoPi * static_cast<double>(k) / static_cast<double>(m));
  return f;
}

cvec HardyFunction::log_derivative_circle(double delta, std::size_t m) const {
  return series_on_circle(times_index(outer_->log_coefficients()), delta, m);
}

double HardyFunction::h2_norm2() const {
  double s = 0.0;
  for (const auto& c : a_) s += std::norm(c);
  return s;
}

}  // namespace wds
