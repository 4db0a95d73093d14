#pragma once

#include <string>
#include <vector>

#include "wds/boundary_set.hpp"
#include "wds/capacity.hpp"
#include "wds/hardy.hpp"
#include "wds/measure.hpp"
#include "wds/outer.hpp"
#include "wds/series.hpp"
#include "wds/types.hpp"

namespace wds {

/// Relative ridge on the normal equations: lambda = kRidge * trace(G).
inline constexpr double kRidge = 1e-10;
inline constexpr double kGramConditionCap = 1e14;

struct DistanceCurve {
  /// d(k) = min over deg p <= k of (||1 - p f||^2 + lambda ||p||^2)^(1/2).
  std::vector<double> d;
  double ridge = 0.0;
  /// First degree whose Gram block exceeded the conditioning cap, or -1.
  int truncated_at = -1;
  std::string diagnostic;
};

/// Gram matrix G_jk = <z^k f, z^j f> in the D_omega norm, computed on
/// Taylor coefficients: ||g||^2 = sum (1 + lambda_m + c m)|g_m|^2 plus
/// sum over atoms a of mass(a) ||(g - g(a)) / (z - a)||^2_{H^2}, where the
/// mass of a disc atom carries the factor 1 - |a|^2.
Eigen::MatrixXcd cyclic_gram(const HardyFunction& f, const SuperharmonicWeight& w, int n);

DistanceCurve cyclic_distance(const HardyFunction& f, const SuperharmonicWeight& w, int n);

enum class Th4Verdict { Met, NotMet, Inconclusive };
std::string to_string(Th4Verdict v);

struct Th4Report {
  Th4Verdict verdict = Th4Verdict::Inconclusive;
  ConditionCReport condition;
};

/// Condition C with eta = log(1/t): int c(E_t) log(1/t) dt / t < inf.
Th4Report th4_test(const CapacitySweep& sweep);

enum class DAlphaVerdict { Cyclic, NoVerdict, Inconclusive };
std::string to_string(DAlphaVerdict v);

struct DAlphaReport {
  DAlphaVerdict verdict = DAlphaVerdict::Inconclusive;
  std::vector<double> t;
  std::vector<double> neighborhood;  // |E_t| in radians
  /// Slope of log2(|E_t| / t^gamma) per halving of t over the last window;
  /// a bounded ratio has slope near 0.
  double gamma_slope = 0.0;
  bool gamma_ok = false;
  SeriesReport integral;
};

/// |E_t| = O(t^gamma) together with int_0^pi dt / (t^alpha |E_t|) = inf.
/// Levels stop at the set's resolution.
DAlphaReport dalpha_test(const BoundarySet& e, double alpha, double gamma, int levels = 30);

struct CandidateReport {
  bool refused = false;
  std::string reason;
  OuterFunction f;
  /// eta^2 at the sweep radii.
  std::vector<double> eta_squared;
  ConditionCReport condition;
};

/// Outer function with log modulus -eta(dist(zeta, E)), where eta^2 grows
/// by min(1, 1 / ((j + 1)^1.5 c_j)) per dyadic level so that condition C
/// holds by construction. Refused when the sweep does not decay. A set of
/// several points gets the product of one-point candidates.
CandidateReport vanishing_cyclic_candidate(const BoundarySet& e, const CapacitySweep& sweep,
                                           std::size_t n);

}  // namespace wds
