#include "wds/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wds/fft.hpp"
#include "wds/types.hpp"

namespace wds {

namespace {

template <int N>
GaussRule expand() {
  using G = boost::math::quadrature::gauss<double, N>;
  GaussRule r;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      r.x.push_back(0.0);
      r.w.push_back(w[i]);
    } else {
      r.x.push_back(-a[i]);
      r.w.push_back(w[i]);
      r.x.push_back(a[i]);
      r.w.push_back(w[i]);
    }
  }
  return r;
}

// Segment of length `len` whose start lies `da` from a0 and whose end lies
// `db` from b0. Distances are accumulated from the exact offsets.
void append_segment(std::vector<LineNode>& out, double a0, double b0, double da, double len,
                    double db, const GaussRule& g) {
  const double half = 0.5 * len;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    double from_a = da + half * (1.0 + g.x[i]);
    double from_b = db + half * (1.0 - g.x[i]);
    double x = (from_a <= from_b) ? a0 + from_a : b0 - from_b;
    out.push_back({x, from_a, from_b, half * g.w[i]});
  }
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static const GaussRule g4 = expand<4>();
  static const GaussRule g8 = expand<8>();
  static const GaussRule g12 = expand<12>();
  static const GaussRule g16 = expand<16>();
  static const GaussRule g20 = expand<20>();
  static const GaussRule g24 = expand<24>();
  static const GaussRule g30 = expand<30>();
  switch (order) {
    case 4: return g4;
    case 8: return g8;
    case 12: return g12;
    case 16: return g16;
    case 20: return g20;
    case 24: return g24;
    case 30: return g30;
    default: throw std::invalid_argument("unsupported Gauss-Legendre order");
  }
}

std::vector<LineNode> graded_rule(double a, double b, bool grade_a, bool grade_b, int levels,
                                  int order) {
  const GaussRule& g = gauss_legendre(order);
  std::vector<LineNode> out;
  const double len = b - a;
  if (!(len > 0.0)) return out;
  if (grade_a && grade_b) {
    auto left = graded_rule(a, a + 0.5 * len, true, false, levels, order);
    for (auto& n : left) {
      n.from_b += 0.5 * len;
      out.push_back(n);
    }
    auto right = graded_rule(a + 0.5 * len, b, false, true, levels, order);
    for (auto& n : right) {
      n.from_a += 0.5 * len;
      out.push_back(n);
    }
    return out;
  }
  if (!grade_a && !grade_b) {
    append_segment(out, a, b, 0.0, len, 0.0, g);
    return out;
  }
  // Grade toward one end: segment k spans distances [L 2^-k-1, L 2^-k]
  // from the graded endpoint, the last one reaching it.
  for (int k = 0; k <= levels; ++k) {
    double far = len * std::ldexp(1.0, -k);
    double near = k == levels ? 0.0 : len * std::ldexp(1.0, -k - 1);
    if (grade_b)
      append_segment(out, a, b, len - far, far - near, near, g);
    else
      append_segment(out, a, b, near, far - near, len - far, g);
  }
  return out;
}

QuadratureGrid QuadratureGrid::dyadic(int blocks, int order, std::size_t angular) {
  if (blocks < 1) throw std::invalid_argument("QuadratureGrid: need at least one block");
  if (!is_pow2(angular)) throw std::invalid_argument("QuadratureGrid: angular count must be a power of two");
  const GaussRule& g = gauss_legendre(order);
  QuadratureGrid q;
  q.order = order;
  q.angular = angular;
  q.block_edges.push_back(1.0);
  for (int k = 0; k < blocks; ++k) {
    double hi = k == 0 ? 1.0 : std::ldexp(1.0, -k);
    double lo = std::ldexp(1.0, -k - 1);
    q.block_edges.push_back(lo);
    double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    // Descending delta inside the block keeps r increasing across the grid.
    std::vector<std::size_t> idx(g.x.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return g.x[a] > g.x[b]; });
    for (std::size_t i : idx) {
      double d = mid + half * g.x[i];
      q.delta.push_back(d);
      q.radial_weight.push_back(half * g.w[i] * 2.0 * (1.0 - d));
    }
  }
  return q;
}

double QuadratureGrid::node_angle(std::size_t j) const {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(angular);
}

double QuadratureGrid::total_weight() const {
  double s = 0.0;
  for (double w : radial_weight) s += w;
  return s;
}

double QuadratureGrid::covered_area() const {
  double d = block_edges.back();
  return (1.0 - d) * (1.0 - d);
}

int QuadratureGrid::block_of(double d) const {
  for (std::size_t k = 0; k + 1 < block_edges.size(); ++k)
    if (d <= block_edges[k] && d >= block_edges[k + 1]) return static_cast<int>(k);
  return -1;
}

}  // namespace wds
