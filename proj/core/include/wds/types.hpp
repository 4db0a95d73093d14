#pragma once

#include <complex>
#include <limits>
#include <vector>

namespace wds {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Partial sums beyond this magnitude are reported as a signaled infinity.
inline constexpr double kDivergenceCap = 1e12;

/// Nonnegative extended real. When `infinite` is set, `value` keeps the
/// partial sum reached before the cap tripped.
struct Extended {
  double value = 0.0;
  bool infinite = false;

  static Extended finite(double v) { return {v, false}; }
  static Extended diverged(double partial) { return {partial, true}; }

  double get() const { return infinite ? kInf : value; }
};

inline Extended capped(double v) {
  if (!(v < kDivergenceCap)) return Extended::diverged(v);
  return Extended::finite(v);
}

inline Extended operator+(Extended a, Extended b) {
  Extended r{a.value + b.value, a.infinite || b.infinite};
  if (!r.infinite && !(r.value < kDivergenceCap)) r.infinite = true;
  return r;
}

}  // namespace wds
