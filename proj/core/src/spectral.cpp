#include "wds/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "wds/fft.hpp"

namespace wds {

namespace {

cvec complexify(const std::vector<double>& h) { return cvec(h.begin(), h.end()); }

std::vector<double> real_part(const cvec& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i].real();
  return r;
}

// Apply a symmetric multiplier m(|n|) to real samples.
template <class M>
std::vector<double> multiplier(const std::vector<double>& h, M m) {
  const std::size_t n = h.size();
  cvec c = fft(complexify(h));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t freq = k <= n / 2 ? k : n - k;
    c[k] *= m(freq, k == n / 2 && n > 1) / static_cast<double>(n);
  }
  return real_part(ifft(c));
}

}  // namespace

cvec fourier_coefficients(const std::vector<double>& h) {
  cvec c = fft(complexify(h));
  const double inv = 1.0 / static_cast<double>(h.size());
  for (auto& v : c) v *= inv;
  return c;
}

cvec herglotz_coefficients(const std::vector<double>& h) {
  const std::size_t n = h.size();
  cvec hat = fourier_coefficients(h);
  cvec c(n / 2 + 1);
  c[0] = hat[0].real();
  for (std::size_t k = 1; k < n / 2; ++k) c[k] = 2.0 * hat[k];
  if (n >= 2) c[n / 2] = hat[n / 2].real();
  return c;
}

std::vector<double> trig_resample(const std::vector<double>& h, std::size_t m) {
  const std::size_t n = h.size();
  if (m < n || !is_pow2(m)) throw std::invalid_argument("trig_resample: bad target size");
  if (m == n) return h;
  cvec hat = fourier_coefficients(h);
  cvec big(m, 0.0);
  big[0] = hat[0];
  for (std::size_t k = 1; k < n / 2; ++k) {
    big[k] = hat[k];
    big[m - k] = hat[n - k];
  }
  if (n >= 2) {
    big[n / 2] = 0.5 * hat[n / 2];
    big[m - n / 2] = 0.5 * hat[n / 2];
  }
  return real_part(ifft(big));
}

double trig_interpolate(const std::vector<double>& h, double angle) {
  const std::size_t n = h.size();
  cvec hat = fourier_coefficients(h);
  double v = hat[0].real();
  for (std::size_t k = 1; k < n / 2; ++k)
    v += 2.0 * (hat[k] * std::polar(1.0, static_cast<double>(k) * angle)).real();
  if (n >= 2) v += hat[n / 2].real() * std::cos(0.5 * static_cast<double>(n) * angle);
  return v;
}

std::vector<double> spectral_derivative(const std::vector<double>& h) {
  const std::size_t n = h.size();
  cvec c = fft(complexify(h));
  for (std::size_t k = 0; k < n; ++k) {
    double freq = k < n / 2 ? static_cast<double>(k)
                            : (k == n / 2 ? 0.0 : static_cast<double>(k) - static_cast<double>(n));
    c[k] *= cplx(0.0, freq) / static_cast<double>(n);
  }
  return real_part(ifft(c));
}

std::vector<double> half_laplacian(const std::vector<double>& h) {
  return multiplier(h, [](std::size_t f, bool) { return static_cast<double>(f); });
}

std::vector<double> poisson_extension(const std::vector<double>& h, double delta) {
  return multiplier(h, [delta](std::size_t f, bool) {
    return radius_power(delta, static_cast<double>(f));
  });
}

double radius_power(double delta, double n) {
  if (n == 0.0) return 1.0;
  if (delta >= 1.0) return 0.0;
  return std::exp(n * std::log1p(-delta));
}

cplx horner(const cvec& a, cplx z) {
  cplx v = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * z + a[i];
  return v;
}

cvec circle_values(const cvec& a, double delta, std::size_t m) {
  if (m < a.size() || !is_pow2(m)) throw std::invalid_argument("circle_values: bad size");
  cvec c(m, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k)
    c[k] = a[k] * radius_power(delta, static_cast<double>(k));
  return ifft(c);
}

}  // namespace wds
