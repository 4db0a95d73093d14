#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wds/capacity.hpp"
#include "wds/cyclicity.hpp"
#include "wds/dirichlet.hpp"
#include "wds/entropy.hpp"
#include "wds/families.hpp"
#include "wds/kernel.hpp"
#include "wds/potentials.hpp"

namespace wds::app {

Scenario resolve(const Overrides& o) {
  Scenario s = o.config.empty() ? parse_config("") : load_config(o.config);
  if (o.grid) {
    const std::size_t n = *o.grid;
    if (n < 8 || (n & (n - 1)) != 0) throw ConfigError("grid.n", "must be a power of two >= 8");
    s.grid_n = n;
  }
  if (o.seed) s.seed = *o.seed;
  if (o.trials) {
    if (*o.trials < 0) throw ConfigError("trials", "must be nonnegative");
    s.trials = *o.trials;
  }
  if (o.tolerance) {
    if (!(*o.tolerance > 0.0)) throw ConfigError("tolerance", "must be positive");
    s.tolerance = *o.tolerance;
  }
  if (o.function) s.function = *o.function;
  if (o.set) s.set = *o.set;
  if (o.points) s.points = parse_config("points = " + *o.points).points;
  return s;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

namespace {

std::string format_point(cplx z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return format_number(z.real()) + (std::signbit(im) ? "-" : "+") + format_number(std::abs(im)) + "i";
}

// Extended values print as "inf" once the divergence cap trips.
double shown(const Extended& e, bool& capped) {
  if (e.infinite) capped = true;
  return e.get();
}

double rel_gap(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::nan("");
  const double m = std::max(std::abs(a), std::abs(b));
  return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

struct Routes {
  double v[4];  // area, local, entropy, douglas
  bool capped = false;
};

Routes all_routes(const HardyFunction& f, const SuperharmonicWeight& w, std::size_t n) {
  Routes r;
  DirichletOptions opt;
  opt.n = n;
  const RouteValues rv = dirichlet(f, w, opt);
  r.v[0] = shown(rv.area, r.capped);
  r.v[1] = shown(rv.local, r.capped);
  r.v[2] = rv.entropy_applicable ? shown(rv.entropy, r.capped) : std::nan("");
  r.v[3] = shown(douglas_type_form(f, w, n), r.capped);
  return r;
}

double max_gap(const Routes& r) {
  double g = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double x = rel_gap(r.v[i], r.v[j]);
      if (!std::isnan(x)) g = std::max(g, x);
    }
  return g;
}

const char* kRouteNames[4] = {"area", "local", "entropy", "douglas"};

}  // namespace

Output cmd_eval(const Scenario& s, const std::string& what) {
  Output out;
  std::ostringstream csv;
  const PotentialEvaluator ev(s.weight);
  bool capped = false;
  if (what == "amu") {
    csv << "zeta,lambda,value\n";
    for (cplx p : s.points)
      csv << format_number(p.real()) << ',' << format_number(p.imag()) << ','
          << format_number(shown(ev.a_mu(p.real(), p.imag()), capped)) << '\n';
  } else {
    std::function<double(cplx)> fn;
    if (what == "green") {
      fn = [&](cplx z) { return shown(ev.green(z), capped); };
    } else if (what == "poisson") {
      fn = [&](cplx z) { return ev.poisson(z); };
    } else if (what == "vmu") {
      fn = [&](cplx z) { return ev.v_mu(z); };
    } else if (what == "psimu") {
      fn = [&](cplx z) { return ev.psi_mu(z); };
    } else if (what == "balayage") {
      fn = [&](cplx z) { return shown(ev.balayage(std::arg(z)), capped); };
    } else if (what == "kernel") {
      fn = [&](cplx z) { return kernel_diag_estimate(z, s.weight.mu); };
    } else {
      throw ConfigError("eval", "unknown quantity '" + what + "'");
    }
    csv << "point,value\n";
    for (cplx p : s.points) csv << format_point(p) << ',' << format_number(fn(p)) << '\n';
  }
  out.text = csv.str();
  if (capped) out.code = kNumericalCap;
  return out;
}

Output cmd_dirichlet(const Scenario& s) {
  const HardyFunction f = make_function(s.function, s.grid_n, s.seed, s.set);
  const Routes r = all_routes(f, s.weight, s.grid_n);
  std::ostringstream csv;
  csv << "route,value,gap_area,gap_local,gap_entropy,gap_douglas\n";
  for (int i = 0; i < 4; ++i) {
    csv << kRouteNames[i] << ',' << format_number(r.v[i]);
    for (int j = 0; j < 4; ++j) csv << ',' << format_number(rel_gap(r.v[i], r.v[j]));
    csv << '\n';
  }
  return {r.capped ? kNumericalCap : kOk, csv.str()};
}

Output cmd_capacity(const Scenario& s, const CapacityArgs& a) {
  const BoundarySet e = parse_set(s.set);
  std::ostringstream csv;
  csv << "t,capacity,iterations,kkt_residual,converged" << (a.condition_c ? ",partial_sum" : "")
      << '\n';
  std::vector<CapacityResult> rows;
  CapacitySweep sweep;
  const bool arc = a.source == "arc";
  if (!arc && a.source != "variational")
    throw ConfigError("source", "expected 'variational' or 'arc'");
  if (e.is_empty() || e.is_circle() || a.t) {
    const double t = a.t.value_or(0.0);
    if (arc) throw ConfigError("source", "the arc estimate needs a sweep");
    rows.push_back(variational_capacity(e, t, s.weight, s.grid_n));
    sweep.t.push_back(t);
    sweep.capacity.push_back(rows.back().value);
  } else if (arc) {
    sweep = capacity_sweep(e, a.levels, CapacitySource::ArcEstimate, nullptr, &s.weight.mu);
    for (double c : sweep.capacity) {
      CapacityResult r;
      r.value = c;
      rows.push_back(r);
    }
  } else {
    const DirichletFormMatrix q = assemble_form(s.weight, s.grid_n);
    sweep = capacity_sweep(e, a.levels, CapacitySource::Variational, &q, nullptr);
    rows = sweep.details;
  }
  std::vector<double> partial;
  if (a.condition_c) {
    const ConditionCReport c = condition_c(sweep, [](double t) { return -std::log(t); });
    partial.push_back(0.0);
    for (double p : c.series.partial_sums) partial.push_back(p);
  }
  bool any_converged = rows.empty();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& r = rows[j];
    any_converged = any_converged || r.converged;
    csv << format_number(sweep.t[j]) << ',' << format_number(r.value) << ',' << r.iterations << ','
        << format_number(r.kkt_residual) << ',' << (r.converged ? 1 : 0);
    if (a.condition_c) csv << ',' << format_number(partial[j]);
    csv << '\n';
  }
  return {any_converged ? kOk : kSolverFailure, csv.str()};
}

namespace {

Json series_json(const SeriesReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["slope"] = r.slope;
  j["tail"] = r.tail;
  j["partial_sums"] = r.partial_sums;
  return j;
}

}  // namespace

Output cmd_cyclicity(const Scenario& s, const CyclicityArgs& a) {
  Output out;
  if (a.mode == "distance") {
    if (a.degree < 0) throw ConfigError("degree", "must be nonnegative");
    const HardyFunction f = make_function(s.function, s.grid_n, s.seed, s.set);
    const DistanceCurve c = cyclic_distance(f, s.weight, a.degree);
    std::ostringstream csv;
    csv << "k,d\n";
    for (std::size_t k = 0; k < c.d.size(); ++k) csv << k << ',' << format_number(c.d[k]) << '\n';
    out.text = csv.str();
    if (c.truncated_at >= 0) out.code = kNumericalCap;
    return out;
  }
  const BoundarySet e = parse_set(s.set);
  Json j;
  j["mode"] = a.mode;
  j["set"] = s.set;
  if (a.mode == "th4" || a.mode == "candidate") {
    const DirichletFormMatrix q = assemble_form(s.weight, s.grid_n);
    const CapacitySweep sweep = capacity_sweep(e, a.levels, CapacitySource::Variational, &q, nullptr);
    j["t"] = sweep.t;
    j["capacity"] = sweep.capacity;
    if (a.mode == "th4") {
      const Th4Report r = th4_test(sweep);
      j["verdict"] = to_string(r.verdict);
      j["series"] = series_json(r.condition.series);
    } else {
      const CandidateReport r = vanishing_cyclic_candidate(e, sweep, s.grid_n);
      j["refused"] = r.refused;
      j["reason"] = r.reason;
      if (!r.refused) {
        bool capped = false;
        j["eta_squared"] = r.eta_squared;
        j["dirichlet"] = shown(dirichlet_local(HardyFunction(r.f), s.weight, s.grid_n), capped);
        j["condition_c"] = series_json(r.condition.series);
        if (capped) out.code = kNumericalCap;
      }
    }
  } else if (a.mode == "dalpha") {
    const DAlphaReport r = dalpha_test(e, a.alpha, a.gamma, a.levels);
    j["alpha"] = a.alpha;
    j["gamma"] = a.gamma;
    j["verdict"] = to_string(r.verdict);
    j["t"] = r.t;
    j["neighborhood"] = r.neighborhood;
    j["gamma_slope"] = r.gamma_slope;
    j["gamma_ok"] = r.gamma_ok;
    j["integral"] = series_json(r.integral);
  } else {
    throw ConfigError("mode", "expected distance, th4, dalpha or candidate");
  }
  out.text = j.dump(2) + "\n";
  return out;
}

Output cmd_sweep(const Scenario& s) {
  std::ostringstream csv;
  csv << "n,area,local,entropy,douglas,max_gap\n";
  bool capped = false;
  for (std::size_t n = 256; n <= std::max<std::size_t>(256, s.grid_n); n *= 2) {
    const HardyFunction f = make_function(s.function, n, s.seed, s.set);
    const Routes r = all_routes(f, s.weight, n);
    capped = capped || r.capped;
    csv << n;
    for (double v : r.v) csv << ',' << format_number(v);
    csv << ',' << format_number(max_gap(r)) << '\n';
  }
  return {capped ? kNumericalCap : kOk, csv.str()};
}

// ---------------------------------------------------------------- verify

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

std::size_t SuiteResult::failed() const { return checks.size() - passed(); }

Json SuiteResult::to_json() const {
  Json j;
  j["suite"] = name;
  j["passed"] = passed();
  j["failed"] = failed();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["check"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    list.push_back(e);
  }
  j["checks"] = list;
  return j;
}

namespace {

int count_or(const Scenario& s, int fallback) { return s.trials > 0 ? s.trials : fallback; }

// Violations keep their instance so the report can be replayed.
struct Tally {
  std::size_t total = 0;
  std::size_t violations = 0;
  double worst = 0.0;
  Json first = nullptr;

  void add(bool ok, double ratio, const std::function<Json()>& instance) {
    ++total;
    worst = std::max(worst, ratio);
    if (!ok) {
      if (violations == 0) first = instance();
      ++violations;
    }
  }
  Check check(const std::string& name) const {
    Json d;
    d["instances"] = total;
    d["violations"] = violations;
    d["max_ratio"] = worst;
    if (violations) d["first_violation"] = first;
    return {name, violations == 0, d};
  }
};

std::vector<std::pair<std::string, SuperharmonicWeight>> route_weights() {
  return {{"classical", family::classical()},
          {"delta1-harmonic", family::point_mass_harmonic()},
          {"delta0-atomic", family::atomic({{0.0, 1.0}})},
          {"standard-alpha-0.5", family::standard_alpha(0.5)}};
}

}  // namespace

SuiteResult suite_bregman(const Scenario&) {
  SuiteResult r{"bregman", {}};
  constexpr double kTol = 1e-12;
  auto le = [](double a, double b) { return a <= b + kTol * std::max(1.0, std::abs(b)); };
  std::vector<double> xs, ys{-kInf};
  for (int i = 0; i < 20; ++i) xs.push_back(-4.0 + 8.0 * i / 19.0);
  for (int i = 0; i < 19; ++i) ys.push_back(-4.0 + 8.0 * i / 18.0);

  Tally basic;
  for (double x : xs) {
    basic.add(bregman_f(x, x) == 0.0, 0.0, [&] { return Json{{"x", x}}; });
    for (double y : ys) {
      const double v = bregman_f(x, y);
      basic.add(v >= 0.0, 0.0, [&] { return Json{{"x", x}, {"y", y}, {"F", v}}; });
    }
  }
  r.checks.push_back(basic.check("F(x,x) = 0 and F >= 0"));

  Tally lo, hi;
  for (double x1 : xs)
    for (double x2 : xs)
      for (double y1 : ys)
        for (double y2 : ys) {
          const double rhs = std::max(bregman_f(x1, y1), bregman_f(x2, y2));
          const double a = bregman_f(std::min(x1, x2), std::min(y1, y2));
          const double b = bregman_f(std::max(x1, x2), std::max(y1, y2));
          auto inst = [&] {
            return Json{{"x1", x1}, {"x2", x2}, {"y1", format_number(y1)}, {"y2", format_number(y2)}};
          };
          lo.add(le(a, rhs), rhs > 0 ? a / rhs : 0.0, inst);
          hi.add(le(b, rhs), rhs > 0 ? b / rhs : 0.0, inst);
        }
  r.checks.push_back(lo.check("min-max inequality, minimum, 20^4 grid"));
  r.checks.push_back(hi.check("min-max inequality, maximum, 20^4 grid"));

  Tally rs2;
  auto g = [](double x) { return x >= 0.0 ? x : 2.0 * x; };
  for (int i = 0; i < 40; ++i)
    for (int k = 0; k < 40; ++k) {
      const double x = -5.0 + 10.0 * i / 39.0, y = -5.0 + 10.0 * k / 39.0;
      const double lhs = bregman_f(g(x), g(y)), rhs = 4.0 * bregman_f(x, y);
      rs2.add(le(lhs, rhs), rhs > 0 ? 4.0 * lhs / rhs : 0.0,
              [&] { return Json{{"x", x}, {"y", y}}; });
    }
  r.checks.push_back(rs2.check("F(g(x), g(y)) <= 4 F(x, y), 40^2 grid"));
  return r;
}

SuiteResult suite_cutoff(const Scenario& s) {
  SuiteResult r{"cutoff", {}};
  const int trials = count_or(s, 100);
  const std::size_t n = std::min<std::size_t>(s.grid_n, 2048);
  constexpr double kSlack = 0.01;
  const auto weights = route_weights();
  std::mt19937_64 rng(s.seed);
  Tally vee, wedge, square;
  for (int i = 0; i < trials; ++i) {
    const std::size_t wi = static_cast<std::size_t>(i) % weights.size();
    const OuterFunction f = random_trig_outer(rng, n), g = random_trig_outer(rng, n);
    const auto& w = weights[wi].second;
    auto d = [&](const OuterFunction& h) { return dirichlet_local(HardyFunction(h), w, n).get(); };
    const double df = d(f), dg = d(g);
    const double dv = d(cutoff_max(f, g)), dw = d(cutoff_min(f, g)), ds = d(wedge_square(f));
    auto inst = [&] { return Json{{"trial", i}, {"weight", weights[wi].first}, {"seed", s.seed}}; };
    vee.add(dv <= (1.0 + kSlack) * (df + dg), dv / (df + dg), inst);
    wedge.add(dw <= (1.0 + kSlack) * (df + dg), dw / (df + dg), inst);
    square.add(ds <= (1.0 + kSlack) * 4.0 * df, ds / df, inst);
  }
  r.checks.push_back(vee.check("D(f v g) <= D(f) + D(g)"));
  r.checks.push_back(wedge.check("D(f ^ g) <= D(f) + D(g)"));
  r.checks.push_back(square.check("D(f ^ f^2) <= 4 D(f), max ratio reported"));

  // The same three inequalities for the entropy functional on a discrete
  // probability space, exact up to rounding.
  constexpr double kTol = 1e-12;
  std::uniform_real_distribution<double> u(0.0, 1.0), lg(-2.0, 2.0);
  Tally pa, pb, pc;
  auto ent = [](const std::vector<double>& sigma, const std::vector<double>& log_mod) {
    std::vector<double> v(log_mod.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = 2.0 * log_mod[k];
    return phi_entropy(sigma, v);
  };
  for (int i = 0; i < trials; ++i) {
    const std::size_t m = 2 + static_cast<std::size_t>(u(rng) * 30);
    std::vector<double> sigma(m), a(m), b(m);
    double tot = 0.0;
    for (std::size_t k = 0; k < m; ++k) tot += sigma[k] = u(rng) + 1e-3;
    for (std::size_t k = 0; k < m; ++k) {
      sigma[k] /= tot;
      a[k] = lg(rng);
      b[k] = lg(rng);
    }
    std::vector<double> mn(m), mx(m), sq(m);
    for (std::size_t k = 0; k < m; ++k) {
      mn[k] = std::min(a[k], b[k]);
      mx[k] = std::max(a[k], b[k]);
      sq[k] = std::min(a[k], 2.0 * a[k]);
    }
    const double ea = ent(sigma, a), eb = ent(sigma, b);
    const double emn = ent(sigma, mn), emx = ent(sigma, mx), esq = ent(sigma, sq);
    auto inst = [&] { return Json{{"trial", i}, {"sigma", sigma}, {"log_f", a}, {"log_g", b}}; };
    const double sum = ea + eb;
    pa.add(emn <= sum + kTol * std::max(1.0, sum), sum > 0 ? emn / sum : 0.0, inst);
    pb.add(emx <= sum + kTol * std::max(1.0, sum), sum > 0 ? emx / sum : 0.0, inst);
    pc.add(esq <= 4.0 * ea + kTol * std::max(1.0, ea), ea > 0 ? esq / ea : 0.0, inst);
  }
  r.checks.push_back(pa.check("probability space: E(f ^ g) <= E(f) + E(g)"));
  r.checks.push_back(pb.check("probability space: E(f v g) <= E(f) + E(g)"));
  r.checks.push_back(pc.check("probability space: E(f ^ f^2) <= 4 E(f)"));
  return r;
}

/// Below this relative gap the disagreement is rounding, not discretization.
constexpr double kHalvingFloor = 1e-8;

SuiteResult suite_routes(const Scenario& s) {
  SuiteResult r{"routes", {}};
  const bool random = s.function == "random-trig";
  const int trials = random ? count_or(s, 20) : 1;
  const std::size_t n = s.grid_n, half = std::max<std::size_t>(n / 2, 8);
  const auto weights = route_weights();
  Tally agree, halves, interior;
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t fseed = rng();
    auto make = [&](std::size_t m) {
      if (!random) return make_function(s.function, m, s.seed, s.set);
      std::mt19937_64 frng(fseed);
      return HardyFunction(random_trig_outer(frng, m));
    };
    const HardyFunction f = make(n), fh = make(half);
    for (const auto& [name, w] : weights) {
      const Routes fine = all_routes(f, w, n), coarse = all_routes(fh, w, half);
      const double g = max_gap(fine), gh = max_gap(coarse);
      auto inst = [&, name = name] {
        Json j{{"trial", i}, {"weight", name}, {"function", s.function}, {"seed", s.seed}};
        for (int k = 0; k < 4; ++k) j[kRouteNames[k]] = fine.v[k];
        return j;
      };
      agree.add(g <= s.tolerance, g, inst);
      halves.add(g <= kHalvingFloor || g <= 0.5 * gh, gh > 0 ? g / gh : 0.0, inst);
    }
    // Entropy identity at interior points.
    for (int k = 0; k < 3; ++k) {
      const cplx w = std::polar(0.95 * std::sqrt(u(rng)), kTwoPi * u(rng));
      if (!f.is_outer()) break;
      const LocalValues lv = local_dirichlet_interior(f, w, n);
      const double gap = rel_gap(lv.douglas.get(), lv.outer.get());
      interior.add(gap <= 0.01, gap, [&] {
        return Json{{"trial", i}, {"w_re", w.real()}, {"w_im", w.imag()}, {"douglas", lv.douglas.get()},
                    {"entropy", lv.outer.get()}};
      });
    }
  }
  r.checks.push_back(agree.check("three routes and Douglas-type form agree"));
  r.checks.push_back(halves.check("disagreement halves when N doubles"));
  r.checks.push_back(interior.check("interior entropy identity within 1%"));
  return r;
}

SuiteResult suite_capacity(const Scenario& s) {
  SuiteResult r{"capacity", {}};
  const int trials = count_or(s, 50);
  constexpr std::size_t kN = 512;
  constexpr double kSolverSlack = 1e-6;
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SuperharmonicWeight classical = family::classical(), atom = family::atomic({{0.0, 1.0}});
  const DirichletFormMatrix qc = assemble_form(classical, kN), qa = assemble_form(atom, kN);

  {
    const double full = variational_capacity(BoundarySet::circle(), 0.0, qc).value;
    const double none = variational_capacity(BoundarySet::empty(), 0.0, qc).value;
    const bool ok = std::abs(full - 1.0) < 1e-9 && none == 0.0;
    r.checks.push_back({"c(T) = 1 and c(empty) = 0", ok, Json{{"circle", full}, {"empty", none}}});
  }

  auto trig_samples = [&](std::size_t n) {
    const int deg = 1 + static_cast<int>(u(rng) * 6);
    std::vector<double> a(deg + 1), b(deg + 1);
    for (int k = 0; k <= deg; ++k) {
      a[k] = 2.0 * u(rng) - 1.0;
      b[k] = 2.0 * u(rng) - 1.0;
    }
    Eigen::VectorXd f(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      double v = 0.0;
      for (int k = 0; k <= deg; ++k) v += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
      f(static_cast<Eigen::Index>(j)) = v;
    }
    return f;
  };

  Tally weak;
  for (int i = 0; i < trials; ++i) {
    const DirichletFormMatrix& q = i % 2 ? qa : qc;
    const Eigen::VectorXd f = trig_samples(kN);
    const double t = (0.2 + 0.8 * u(rng)) * f.cwiseAbs().maxCoeff();
    const InequalityReport rep = weak_type_check(f, t, q);
    weak.add(rep.ratio <= 1.0 + kSolverSlack && rep.converged, rep.ratio,
             [&] { return Json{{"trial", i}, {"level", t}, {"lhs", rep.lhs}, {"rhs", rep.rhs}}; });
  }
  {
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(kN);
    const InequalityReport a = weak_type_check(one, 2.0, qc), b = weak_type_check(one, 0.5, qc);
    weak.add(a.lhs == 0.0, 0.0, [&] { return Json{{"case", "f = 1, t = 2"}, {"lhs", a.lhs}}; });
    weak.add(std::abs(b.lhs - 1.0) < 1e-9 && std::abs(b.rhs - 4.0) < 1e-9, b.ratio,
             [&] { return Json{{"case", "f = 1, t = 1/2"}, {"lhs", b.lhs}, {"rhs", b.rhs}}; });
  }
  r.checks.push_back(weak.check("weak-type inequality"));

  // Strong type: one family-wide constant, stable under N doubling.
  auto spike_family = [](std::size_t n) {
    std::vector<Eigen::VectorXd> fs{Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n))};
    for (int k = 3; k <= 8; ++k) {
      const double t0 = std::ldexp(1.0, -k);
      Eigen::VectorXd f(static_cast<Eigen::Index>(n));
      for (std::size_t j = 0; j < n; ++j) {
        const double d = 2.0 * std::abs(std::sin(kPi * static_cast<double>(j) / static_cast<double>(n)));
        f(static_cast<Eigen::Index>(j)) = std::max(0.0, 1.0 - d / t0);
      }
      fs.push_back(f);
    }
    return fs;
  };
  double worst[2] = {0.0, 0.0};
  bool strong_ok = true;
  Json strong_detail;
  for (int level = 0; level < 2; ++level) {
    const std::size_t n = level ? kN : kN / 2;
    for (const auto& [name, w] : {std::pair{"classical", classical}, std::pair{"delta0-atomic", atom}}) {
      const DirichletFormMatrix q = level ? (w.mu.atoms.empty() ? qc : qa) : assemble_form(w, n);
      for (const auto& f : spike_family(n)) {
        const InequalityReport rep = strong_type_check(f, q);
        worst[level] = std::max(worst[level], rep.ratio);
        strong_ok = strong_ok && rep.converged && rep.ratio <= kStrongTypeConstant;
      }
    }
    strong_detail[level ? "max_ratio_n" : "max_ratio_n_half"] = worst[level];
  }
  {
    const InequalityReport one = strong_type_check(Eigen::VectorXd::Ones(kN), qc);
    strong_detail["f_one_lhs"] = one.lhs;
    strong_ok = strong_ok && std::abs(one.lhs - 0.5) < 1e-9;
  }
  const double drift = std::abs(worst[1] - worst[0]) / worst[1];
  strong_detail["constant"] = kStrongTypeConstant;
  strong_detail["relative_drift"] = drift;
  r.checks.push_back({"strong-type ratio bounded by the family constant", strong_ok, strong_detail});
  r.checks.push_back({"strong-type constant stable under N doubling (20%)", drift <= 0.2,
                      Json{{"relative_drift", drift}}});

  // Choquet subadditivity on random arc pairs, 2% solver slack.
  Tally sub;
  for (int i = 0; i < std::max(1, trials / 5); ++i) {
    const double a1 = kTwoPi * u(rng), l1 = 0.05 + 0.5 * u(rng);
    const double a2 = kTwoPi * u(rng), l2 = 0.05 + 0.5 * u(rng);
    const BoundarySet e1({{a1, l1}}), e2({{a2, l2}}), both({{a1, l1}, {a2, l2}});
    const double c1 = variational_capacity(e1, 0.0, qc).value;
    const double c2 = variational_capacity(e2, 0.0, qc).value;
    const double c12 = variational_capacity(both, 0.0, qc).value;
    sub.add(c12 <= 1.02 * (c1 + c2), c12 / (c1 + c2), [&] {
      return Json{{"arc1", {a1, l1}}, {"arc2", {a2, l2}}, {"c1", c1}, {"c2", c2}, {"union", c12}};
    });
  }
  r.checks.push_back(sub.check("subadditivity on random arc pairs"));

  // Monotone along nested arcs.
  {
    bool ok = true;
    Json vals = Json::array();
    double prev = kInf;
    for (int k = 0; k <= 6; ++k) {
      const double len = std::ldexp(1.0, -k);
      const double c = variational_capacity(BoundarySet::arc(-0.5 * len, 0.5 * len), 0.0, qc).value;
      ok = ok && c <= prev * (1.0 + kSolverSlack);
      prev = c;
      vals.push_back(c);
    }
    r.checks.push_back({"monotone on nested arcs", ok, Json{{"values", vals}}});
  }

  // Grid stability on arcs of length 1 and 1/2.
  {
    bool ok = true;
    Json vals = Json::array();
    for (const auto& w : {classical, atom})
      for (double len : {1.0, 0.5}) {
        const BoundarySet e = BoundarySet::arc(-0.5 * len, 0.5 * len);
        const double c1 = variational_capacity(e, 0.0, w, kN / 2).value;
        const double c2 = variational_capacity(e, 0.0, w.mu.atoms.empty() ? qc : qa).value;
        const double change = std::abs(c2 - c1) / c2;
        ok = ok && change < 0.05;
        vals.push_back(Json{{"length", len}, {"coarse", c1}, {"fine", c2}, {"change", change}});
      }
    r.checks.push_back({"grid stability under N doubling (5%)", ok, vals});
  }

  // Finite atomic mu: a point at one grid spacing loses capacity as N grows.
  {
    Json vals = Json::array();
    std::vector<double> c;
    for (std::size_t n : {128, 256, 512}) {
      const double t = grid_spacing(n);
      c.push_back(variational_capacity(BoundarySet::point(0.0), t, n == kN ? qa : assemble_form(atom, n)).value);
      vals.push_back(Json{{"n", n}, {"t", t}, {"capacity", c.back()}});
    }
    const bool ok = c[1] < c[0] && c[2] < c[1] && c[2] < 0.5 * c[0];
    r.checks.push_back({"point capacity tends to 0 for finite atomic mu", ok, vals});
  }
  return r;
}

SuiteResult suite_cyclicity(const Scenario& s) {
  SuiteResult r{"cyclicity", {}};
  const int trials = count_or(s, 10);
  constexpr int kDegree = 64;
  constexpr std::size_t kN = 1024;
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Tally decay, monotone, scaling;
  for (int i = 0; i < trials; ++i) {
    std::vector<DiscAtom> atoms;
    const int count = 1 + static_cast<int>(u(rng) * 3);
    for (int k = 0; k < count; ++k)
      atoms.push_back({std::polar(0.9 * std::sqrt(u(rng)), kTwoPi * u(rng)), 0.1 + 1.9 * u(rng)});
    const SuperharmonicWeight w = family::atomic(atoms);
    const OuterFunction fo = random_trig_outer(rng, kN);
    const HardyFunction f(fo);
    const DistanceCurve c = cyclic_distance(f, w, kDegree);
    auto inst = [&] {
      Json a = Json::array();
      for (const auto& at : atoms) a.push_back({at.position.real(), at.position.imag(), at.mass});
      return Json{{"trial", i}, {"atoms", a}, {"seed", s.seed}, {"d_last", c.d.empty() ? 1.0 : c.d.back()}};
    };
    const bool full = c.truncated_at < 0 && static_cast<int>(c.d.size()) == kDegree + 1;
    decay.add(full && c.d.back() < 0.1, c.d.empty() ? 1.0 : c.d.back(), inst);
    bool mono = true;
    for (std::size_t k = 1; k < c.d.size(); ++k) mono = mono && c.d[k] <= c.d[k - 1] + 1e-12;
    monotone.add(mono, 0.0, inst);
    for (double scale : {0.5, 2.0}) {
      cvec a = f.coefficients();
      for (auto& x : a) x *= scale;
      const DistanceCurve cs = cyclic_distance(HardyFunction(a), w, kDegree);
      const bool same = !cs.d.empty() && (cs.d.back() < 0.1) == (c.d.back() < 0.1);
      scaling.add(same, 0.0, inst);
    }
  }
  r.checks.push_back(decay.check("finite atomic mu: d(64) < 0.1 for bounded log modulus"));
  r.checks.push_back(monotone.check("distance curves nonincreasing"));
  r.checks.push_back(scaling.check("verdict invariant under c f, c in {0.5, 2}"));

  {
    const DistanceCurve c = cyclic_distance(HardyFunction::constant(1.0), family::classical(), kDegree);
    const double worst = *std::max_element(c.d.begin(), c.d.end());
    r.checks.push_back({"f = 1 has distance at the ridge floor", worst < 1e-3, Json{{"max_d", worst}}});
  }

  {
    const DirichletFormMatrix q = assemble_form(family::classical(), kN);
    const auto none = th4_test(capacity_sweep(BoundarySet::empty(), 12, CapacitySource::Variational, &q, nullptr));
    const auto fat = th4_test(capacity_sweep(BoundarySet::arc(0.0, 1.0), 12, CapacitySource::Variational, &q, nullptr));
    const SuperharmonicWeight atom = family::atomic({{0.0, 1.0}});
    const auto pt = th4_test(capacity_sweep(BoundarySet::point(0.0), 30, CapacitySource::ArcEstimate, nullptr, &atom.mu));
    const bool ok = none.verdict == Th4Verdict::Met && fat.verdict == Th4Verdict::NotMet &&
                    pt.verdict == Th4Verdict::Met;
    r.checks.push_back({"th4 verdicts: empty met, fat arc not met, point under delta0 met", ok,
                        Json{{"empty", to_string(none.verdict)},
                             {"fat_arc", to_string(fat.verdict)},
                             {"point_delta0", to_string(pt.verdict)}}});
  }

  {
    const auto pts = dalpha_test(BoundarySet::points({0.0, 2.0}), 0.5, 1.0);
    const auto arc = dalpha_test(BoundarySet::arc(0.0, 1.0), 0.5, 0.5);
    const auto gc = dalpha_test(BoundarySet::generalized_cantor(0.0, 1.0, 12), 0.9, 0.5);
    const bool ok = pts.verdict == DAlphaVerdict::Cyclic && arc.verdict == DAlphaVerdict::NoVerdict &&
                    gc.verdict == DAlphaVerdict::Inconclusive;
    r.checks.push_back({"D_alpha verdicts: points cyclic, arc none, generalized Cantor inconclusive", ok,
                        Json{{"points", to_string(pts.verdict)},
                             {"arc", to_string(arc.verdict)},
                             {"generalized_cantor", to_string(gc.verdict)}}});
  }
  return r;
}

Output cmd_verify(const Scenario& s, const std::string& suite, const std::string& echo,
                  const std::string& config_text) {
  std::vector<std::string> names;
  if (suite == "all")
    names = {"bregman", "cutoff", "routes", "capacity", "cyclicity"};
  else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end())
    names = {suite};
  else
    throw ConfigError("suite", "unknown suite '" + suite + "'");
  Json report;
  report["command"] = echo;
  char digest[32];
  std::snprintf(digest, sizeof digest, "%016zx", std::hash<std::string>{}(config_text));
  report["config_digest"] = digest;
  report["seed"] = s.seed;
  report["trials"] = s.trials;
  report["tolerances"] = Json{{"routes", s.tolerance}, {"cutoff_slack", 0.01}, {"exact", 1e-12}};
  Json suites = Json::array();
  std::size_t passed = 0, failed = 0;
  for (const auto& name : names) {
    SuiteResult res = name == "bregman"    ? suite_bregman(s)
                      : name == "cutoff"   ? suite_cutoff(s)
                      : name == "routes"   ? suite_routes(s)
                      : name == "capacity" ? suite_capacity(s)
                                           : suite_cyclicity(s);
    passed += res.passed();
    failed += res.failed();
    suites.push_back(res.to_json());
  }
  report["suites"] = suites;
  report["passed"] = passed;
  report["failed"] = failed;
  return {failed ? kViolation : kOk, report.dump(2) + "\n"};
}

}  // namespace wds::app
