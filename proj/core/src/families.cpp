#include "wds/families.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wds {

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> w;
  std::string t;
  while (in >> t) w.push_back(t);
  return w;
}

double num(const std::vector<std::string>& w, std::size_t i, const std::string& spec) {
  if (i >= w.size()) throw std::invalid_argument("missing argument in '" + spec + "'");
  std::size_t used = 0;
  double v = std::stod(w[i], &used);
  if (used != w[i].size()) throw std::invalid_argument("bad number in '" + spec + "'");
  return v;
}

void arity(const std::vector<std::string>& w, std::size_t n, const std::string& spec) {
  if (w.size() != n) throw std::invalid_argument("wrong argument count in '" + spec + "'");
}

}  // namespace

BoundarySet parse_set(const std::string& spec) {
  const auto w = words(spec);
  if (w.empty()) throw std::invalid_argument("empty set spec");
  const std::string& k = w[0];
  if (k == "empty") return arity(w, 1, spec), BoundarySet::empty();
  if (k == "circle") return arity(w, 1, spec), BoundarySet::circle();
  if (k == "point") return arity(w, 2, spec), BoundarySet::point(num(w, 1, spec));
  if (k == "points") {
    std::vector<double> a;
    for (std::size_t i = 1; i < w.size(); ++i) a.push_back(num(w, i, spec));
    if (a.empty()) throw std::invalid_argument("points needs at least one angle");
    return BoundarySet::points(a);
  }
  if (k == "arc") return arity(w, 3, spec), BoundarySet::arc(num(w, 1, spec), num(w, 2, spec));
  if (k == "cantor" || k == "generalized-cantor") {
    arity(w, 4, spec);
    const double levels = num(w, 3, spec);
    if (levels < 0 || levels > 24 || levels != std::floor(levels))
      throw std::invalid_argument("levels must be an integer in 0..24");
    return k == "cantor" ? BoundarySet::cantor(num(w, 1, spec), num(w, 2, spec), static_cast<int>(levels))
                         : BoundarySet::generalized_cantor(num(w, 1, spec), num(w, 2, spec),
                                                           static_cast<int>(levels));
  }
  throw std::invalid_argument("unknown set kind '" + k + "'");
}

OuterFunction random_trig_outer(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int d = deg(rng);
  std::vector<double> a(d + 1), b(d + 1);
  for (int k = 1; k <= d; ++k) {
    a[k] = u(rng) * 0.5 / (k * k);
    b[k] = u(rng) * 0.5 / (k * k);
  }
  std::vector<double> h(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    for (int k = 1; k <= d; ++k) h[j] += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
  }
  return outer_from_log_modulus(std::move(h));
}

HardyFunction make_function(const std::string& spec, std::size_t n, std::uint64_t seed,
                            const std::string& set_spec) {
  const auto w = words(spec);
  if (w.empty()) throw std::invalid_argument("empty function spec");
  const std::string& k = w[0];
  if (k == "constant") return arity(w, 2, spec), HardyFunction::constant(num(w, 1, spec));
  if (k == "monomial") {
    arity(w, 2, spec);
    const double m = num(w, 1, spec);
    if (m < 0 || m != std::floor(m)) throw std::invalid_argument("monomial degree must be a natural number");
    return HardyFunction::monomial(static_cast<std::size_t>(m));
  }
  if (k == "one-minus-z") {
    arity(w, 1, spec);
    return HardyFunction(OuterFunction(BoundaryLogModulus::from_function(n, [](double t) {
      return t == 0.0 ? -kInf : std::log(2.0 * std::sin(0.5 * t));
    })));
  }
  if (k == "two-plus-cos") {
    arity(w, 1, spec);
    return HardyFunction(OuterFunction(
        BoundaryLogModulus::from_function(n, [](double t) { return std::log(2.0 + std::cos(t)); })));
  }
  if (k == "random-trig") {
    arity(w, 1, spec);
    std::mt19937_64 rng(seed);
    return HardyFunction(random_trig_outer(rng, n));
  }
  if (k == "distance") {
    if (w.size() < 2) throw std::invalid_argument("distance needs a profile");
    DistanceProfile phi = DistanceProfile::constant();
    if (w[1] == "log") {
      arity(w, 3, spec);
      phi = DistanceProfile::log(num(w, 2, spec));
    } else if (w[1] == "power") {
      arity(w, 3, spec);
      phi = DistanceProfile::power(num(w, 2, spec));
    } else if (w[1] == "exp-log") {
      arity(w, 4, spec);
      phi = DistanceProfile::exp_log(num(w, 2, spec), num(w, 3, spec));
    } else {
      throw std::invalid_argument("unknown profile '" + w[1] + "'");
    }
    return HardyFunction(distance_outer(phi, parse_set(set_spec), n));
  }
  if (k == "csv") {
    arity(w, 2, spec);
    return HardyFunction(OuterFunction(BoundaryLogModulus::from_csv(w[1])));
  }
  throw std::invalid_argument("unknown function kind '" + k + "'");
}

}  // namespace wds
