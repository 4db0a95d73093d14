#pragma once

#include <string>
#include <vector>

namespace wds {

enum class SeriesVerdict { Finite, Divergent, Inconclusive };

std::string to_string(SeriesVerdict v);

struct SeriesReport {
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  std::vector<double> increments;
  std::vector<double> partial_sums;
  /// Least-squares slope of log2(increment) over the last window.
  double slope = 0.0;
  /// Geometric tail estimate from the fitted decay ratio.
  double tail = 0.0;
};

inline constexpr int kSeriesWindow = 5;
inline constexpr double kSlopeThreshold = 0.1;
inline constexpr double kTailFraction = 0.05;

/// Dyadic series test on nonnegative increments. Divergent when the fitted
/// slope over the last `window` levels is at least -threshold; finite when it
/// is below and the geometric tail is at most tail_fraction of the partial
/// sum; inconclusive otherwise.
SeriesReport series_verdict(const std::vector<double>& increments, int window = kSeriesWindow,
                            double threshold = kSlopeThreshold, double tail_fraction = kTailFraction);

}  // namespace wds
