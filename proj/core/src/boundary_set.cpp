#include "wds/boundary_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wds {

namespace {

double mod2pi(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

// Merged disjoint intervals in [0, 2 pi) covering the union of the arcs
// widened by `pad` on each side.
std::vector<std::pair<double, double>> merged(const std::vector<Arc>& arcs, double pad) {
  std::vector<std::pair<double, double>> iv;
  for (const auto& a : arcs) {
    double len = a.length + 2.0 * pad;
    if (len >= kTwoPi) return {{0.0, kTwoPi}};
    double s = mod2pi(a.start - pad);
    if (s + len <= kTwoPi) {
      iv.push_back({s, s + len});
    } else {
      iv.push_back({s, kTwoPi});
      iv.push_back({0.0, s + len - kTwoPi});
    }
  }
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& v : iv) {
    if (!out.empty() && v.first <= out.back().second)
      out.back().second = std::max(out.back().second, v.second);
    else
      out.push_back(v);
  }
  return out;
}

}  // namespace

double chordal_half_angle(double t) {
  if (t >= 2.0) return kPi;
  return 2.0 * std::asin(0.5 * t);
}

BoundarySet::BoundarySet(std::vector<Arc> arcs, std::string label)
    : arcs_(std::move(arcs)), label_(std::move(label)) {
  for (auto& a : arcs_) {
    if (!(a.length >= 0.0) || !std::isfinite(a.start))
      throw std::invalid_argument("boundary set arcs need finite start and nonnegative length");
    a.start = mod2pi(a.start);
    a.length = std::min(a.length, kTwoPi);
  }
}

BoundarySet BoundarySet::empty() { return BoundarySet({}, "empty"); }
BoundarySet BoundarySet::circle() { return BoundarySet({{0.0, kTwoPi}}, "circle"); }
BoundarySet BoundarySet::point(double angle) { return BoundarySet({{angle, 0.0}}, "point"); }

BoundarySet BoundarySet::points(const std::vector<double>& angles) {
  std::vector<Arc> a;
  for (double t : angles) a.push_back({t, 0.0});
  return BoundarySet(std::move(a), "points");
}

BoundarySet BoundarySet::arc(double a, double b) {
  if (!(b > a)) throw std::invalid_argument("arc requires b > a");
  return BoundarySet({{a, b - a}}, "arc");
}

BoundarySet BoundarySet::cantor(double start, double length, int levels) {
  std::vector<Arc> cur{{start, length}};
  for (int n = 0; n < levels; ++n) {
    std::vector<Arc> next;
    for (const auto& a : cur) {
      double l = a.length / 3.0;
      next.push_back({a.start, l});
      next.push_back({a.start + 2.0 * l, l});
    }
    cur = std::move(next);
  }
  double res = cur.front().length;
  BoundarySet e(std::move(cur), "cantor");
  e.resolution_ = res;
  return e;
}

BoundarySet BoundarySet::generalized_cantor(double start, double length, int levels) {
  std::vector<Arc> cur{{start, length}};
  for (int n = 1; n <= levels; ++n) {
    double l = length * std::ldexp(1.0, -n) / (n + 1);
    std::vector<Arc> next;
    for (const auto& a : cur) {
      next.push_back({a.start, l});
      next.push_back({a.start + a.length - l, l});
    }
    cur = std::move(next);
  }
  double res = cur.front().length;
  BoundarySet e(std::move(cur), "generalized-cantor");
  e.resolution_ = res;
  return e;
}

bool BoundarySet::is_circle() const {
  auto m = merged(arcs_, 0.0);
  return m.size() == 1 && m[0].first == 0.0 && m[0].second >= kTwoPi;
}

double BoundarySet::angular_distance(double angle) const {
  double best = kInf;
  for (const auto& a : arcs_) {
    double off = mod2pi(angle - a.start);
    if (off <= a.length) return 0.0;
    best = std::min(best, std::min(off - a.length, kTwoPi - off));
  }
  return std::min(best, kPi);
}

double BoundarySet::distance(double angle) const {
  if (arcs_.empty()) return kInf;
  return 2.0 * std::sin(0.5 * angular_distance(angle));
}

double BoundarySet::neighborhood_measure(double t) const {
  if (arcs_.empty()) return 0.0;
  double pad = t > 0.0 ? chordal_half_angle(t) : 0.0;
  double s = 0.0;
  for (const auto& v : merged(arcs_, pad)) s += v.second - v.first;
  return s;
}

std::vector<Arc> BoundarySet::neighborhood_arcs(double t) const {
  if (arcs_.empty()) return {};
  auto iv = merged(arcs_, t > 0.0 ? chordal_half_angle(t) : 0.0);
  if (iv.size() > 1 && iv.front().first == 0.0 && iv.back().second >= kTwoPi) {
    iv.front().first = iv.back().first - kTwoPi;
    iv.pop_back();
  }
  std::vector<Arc> out;
  for (const auto& v : iv) out.push_back({mod2pi(v.first), v.second - v.first});
  return out;
}

std::vector<char> BoundarySet::node_mask(std::size_t n, double t) const {
  std::vector<char> mask(n, 0);
  if (arcs_.empty()) return mask;
  double half = t > 0.0 ? chordal_half_angle(t) : 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = angular_distance(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    mask[k] = t > 0.0 ? (d < half) : (d == 0.0);
  }
  return mask;
}

}  // namespace wds
