#pragma once

#include <vector>

#include "wds/types.hpp"

// Band-limited tools for real samples on the uniform circle grid
// t_k = 2 pi k / N, N a power of two. The Nyquist mode is treated as
// cos(N t / 2) so every operation maps real data to real data.
namespace wds {

/// hat h_n = (1/N) sum_k h_k e^{-i n t_k}, n = 0..N-1.
cvec fourier_coefficients(const std::vector<double>& h);

/// Taylor coefficients c_0..c_{N/2} of the analytic function whose real
/// part on the circle is the band-limited interpolant of h.
cvec herglotz_coefficients(const std::vector<double>& h);

/// Band-limited interpolant of h resampled on m >= N nodes.
std::vector<double> trig_resample(const std::vector<double>& h, std::size_t m);

/// Band-limited interpolant evaluated at an arbitrary angle.
double trig_interpolate(const std::vector<double>& h, double angle);

std::vector<double> spectral_derivative(const std::vector<double>& h);

/// Fourier multiplier |n|.
std::vector<double> half_laplacian(const std::vector<double>& h);

/// Poisson extension to radius 1 - delta, sampled on the same angles.
std::vector<double> poisson_extension(const std::vector<double>& h, double delta);

/// (1 - delta)^n without cancellation near delta = 0.
double radius_power(double delta, double n);

cplx horner(const cvec& a, cplx z);

/// Values of sum_n a_n z^n at z = (1-delta) e^{2 pi i k / m}, k < m.
/// Requires m >= a.size() and m a power of two.
cvec circle_values(const cvec& a, double delta, std::size_t m);

}  // namespace wds
