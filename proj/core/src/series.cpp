#include "wds/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wds {

std::string to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Finite: return "finite";
    case SeriesVerdict::Divergent: return "divergent";
    case SeriesVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SeriesReport series_verdict(const std::vector<double>& increments, int window, double threshold,
                            double tail_fraction) {
  SeriesReport rep;
  rep.increments = increments;
  double s = 0.0;
  for (double v : increments) {
    s += v;
    rep.partial_sums.push_back(s);
  }
  const int n = static_cast<int>(increments.size());
  if (n == 0) {
    rep.verdict = SeriesVerdict::Finite;
    return rep;
  }
  const int w = std::min(window, n);
  const int first = n - w;
  bool all_zero = true;
  for (int i = first; i < n; ++i)
    if (increments[i] > 0.0) all_zero = false;
  if (all_zero) {
    rep.verdict = SeriesVerdict::Finite;
    rep.slope = -std::numeric_limits<double>::infinity();
    return rep;
  }
  if (w < 3) return rep;
  // Zero increments inside a nonzero window count as a very steep drop.
  double floor = 0.0;
  for (int i = first; i < n; ++i) floor = std::max(floor, increments[i]);
  floor *= 1e-30;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = first; i < n; ++i) {
    double x = i, y = std::log2(std::max(increments[i], floor));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.slope = (w * sxy - sx * sy) / (w * sxx - sx * sx);
  if (rep.slope >= -threshold) {
    rep.verdict = SeriesVerdict::Divergent;
    rep.tail = std::numeric_limits<double>::infinity();
    return rep;
  }
  const double q = std::exp2(rep.slope);
  rep.tail = increments.back() * q / (1.0 - q);
  rep.verdict = rep.tail <= tail_fraction * s ? SeriesVerdict::Finite : SeriesVerdict::Inconclusive;
  return rep;
}

}  // namespace wds
