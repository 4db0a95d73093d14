// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "app.hpp"
#include "oracle_values.hpp"
#include "wds/capacity.hpp"
#include "wds/dirichlet.hpp"
#include "wds/families.hpp"
#include "wds/kernel.hpp"

using namespace wds;
using namespace wds::app;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Scenario scenario(std::size_t n, int trials, std::uint64_t seed = 20240601) {
  Overrides o;
  o.grid = n;
  o.trials = trials;
  o.seed = seed;
  return resolve(o);
}

// All checks of a suite whose name contains one of `keys`.
Verdict suite_checks(const SuiteResult& r, const std::vector<std::string>& keys) {
  Verdict v{true, ""};
  for (const Check& c : r.checks) {
    bool wanted = keys.empty();
    for (const auto& k : keys) wanted = wanted || c.name.find(k) != std::string::npos;
    if (!wanted) continue;
    v.pass = v.pass && c.passed;
    v.detail += (v.detail.empty() ? "" : "; ") + c.name + (c.passed ? " ok" : " FAILED");
    if (c.detail.is_object() && c.detail.contains("max_ratio"))
      v.detail += " (max ratio " + format_number(c.detail["max_ratio"].get<double>()) + ")";
  }
  return v;
}

Verdict classical_monomials() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const HardyFunction f = HardyFunction::monomial(n);
    const RouteValues r = dirichlet(f, family::classical(), {.n = 4096});
    std::vector<double> values{r.area.get(), r.local.get(), douglas_type_form(f, family::classical(), 4096).get()};
    if (r.entropy_applicable) values.push_back(r.entropy.get());
    for (double v : values) worst = std::max(worst, std::abs(v - n) / n);
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-4 && secs < 10.0, "max relative error " + fmt("%.2e", worst) + ", " + fmt("%.1f s", secs)};
}

Verdict route_agreement() {
  Scenario s = scenario(4096, 20);
  s.tolerance = 0.02;
  return suite_checks(suite_routes(s), {"agree", "halves"});
}

Verdict entropy_identity() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const HardyFunction f = make_function("random-trig", 4096, 1000 + i, "");
    const cplx w = std::polar(0.95 * std::sqrt(u(rng)), kTwoPi * u(rng));
    const LocalValues lv = local_dirichlet_interior(f, w, 4096);
    worst = std::max(worst, std::abs(lv.douglas.get() - lv.outer.get()) / std::abs(lv.douglas.get()));
  }
  return {worst <= 0.01, "50 pairs, max relative gap " + fmt("%.2e", worst)};
}

Verdict cutoff_inequalities() {
  const SuiteResult r = suite_cutoff(scenario(2048, 100));
  Verdict v = suite_checks(r, {"D(", "probability"});
  for (const Check& c : r.checks)
    if (c.name.find("f^2") != std::string::npos && c.name.find("probability") == std::string::npos) {
      const double m = c.detail["max_ratio"].get<double>();
      v.pass = v.pass && m < 4.04;
      v.detail += "; f ^ f^2 empirical max ratio " + fmt("%.4f", m);
    }
  return v;
}

Verdict bregman_inequalities() { return suite_checks(suite_bregman(scenario(1024, 0)), {}); }

Verdict kernel_exponent() {
  bool ok = true;
  std::string detail;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const DiscMeasure mu = family::standard_alpha_measure(alpha);
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (int k = 4; k <= 14; ++k) {
      const double delta = std::ldexp(1.0, -k);
      const double x = -std::log(delta), y = std::log(kernel_diag_estimate(cplx(1.0 - delta), mu));
      sx += x, sy += y, sxx += x * x, sxy += x * y, n += 1;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    ok = ok && std::abs(slope - alpha) <= 0.05;
    detail += (detail.empty() ? "" : ", ") + fmt("alpha %.2f", alpha) + fmt(" slope %.4f", slope);
  }
  return {ok, detail};
}

Verdict arc_consistency() {
  bool ok = true;
  std::string detail;
  for (const auto& [name, w] : {std::pair{"delta0", family::atomic({{0.0, 1.0}})},
                                std::pair{"mu_0.5", family::standard_alpha(0.5)}}) {
    const DirichletFormMatrix q = assemble_form(w, 2048);
    double lo = kInf, hi = 0.0;
    for (int k = 3; k <= 8; ++k) {
      const double len = std::ldexp(1.0, -k);
      const Arc arc{-0.5 * len, len};
      const CapacityResult c = variational_capacity(BoundarySet({arc}), 0.0, q);
      const double r = c.value / arc_capacity_estimate(arc, w.mu);
      ok = ok && c.converged;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    ok = ok && lo > 0.0 && hi / lo <= 32.0;
    detail += (detail.empty() ? "" : ", ") + std::string(name) + " ratio in [" + fmt("%.4f", lo) + ", " +
              fmt("%.4f", hi) + "]";
  }
  return {ok, detail};
}

Verdict point_polarity() {
  const PolarReport d0 = point_polar_test(0.0, family::atomic({{0.0, 1.0}}).mu);
  bool ok = d0.verdict == PolarVerdict::Polar;
  for (double alpha : {0.25, 0.5, 0.75})
    ok = ok && point_polar_test(0.0, family::standard_alpha_measure(alpha)).verdict == PolarVerdict::Polar;
  const PolarReport des = point_polar_test(0.0, family::designed_atomic(0.0, 40));
  ok = ok && des.verdict == PolarVerdict::NonPolar;
  const std::pair<int, double> oracle[] = {
      {4, oracle::kDesignedPolarPartial4},   {8, oracle::kDesignedPolarPartial8},
      {12, oracle::kDesignedPolarPartial12}, {16, oracle::kDesignedPolarPartial16},
      {20, oracle::kDesignedPolarPartial20}, {24, oracle::kDesignedPolarPartial24}};
  double worst = 0.0;
  for (const auto& [k, v] : oracle) worst = std::max(worst, std::abs(des.partial_integrals.at(k) - v) / v);
  ok = ok && worst <= 1e-8;
  return {ok, "delta0 " + to_string(d0.verdict) + ", designed " + to_string(des.verdict) +
                  ", oracle partial sums max relative error " + fmt("%.2e", worst)};
}

Verdict capacitary_inequalities() {
  const SuiteResult r = suite_capacity(scenario(512, 50));
  Verdict v = suite_checks(r, {"weak-type", "strong-type"});
  for (const Check& c : r.checks)
    if (c.name.find("family constant") != std::string::npos)
      v.detail += "; strong-type ratio N/2 " + format_number(c.detail["max_ratio_n_half"].get<double>()) +
                  ", N " + format_number(c.detail["max_ratio_n"].get<double>());
  return v;
}

Verdict finite_mu_cyclicity() {
  const auto t0 = Clock::now();
  Verdict v = suite_checks(suite_cyclicity(scenario(1024, 10)), {"d(64)", "nonincreasing"});
  const double secs = seconds_since(t0);
  v.pass = v.pass && secs < 300.0;
  v.detail += "; " + fmt("%.1f s", secs);
  return v;
}

Verdict determinism() {
  const Scenario s = scenario(1024, 2, 99);
  const std::string a = cmd_verify(s, "all", "verify all", "seed = 99").text;
  const std::string b = cmd_verify(s, "all", "verify all", "seed = 99").text;
  return {!a.empty() && a == b, std::to_string(a.size()) + " byte report, " + (a == b ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"classical monomials", classical_monomials},
      {"route agreement", route_agreement},
      {"entropy identity", entropy_identity},
      {"cut-off inequalities", cutoff_inequalities},
      {"Bregman inequalities", bregman_inequalities},
      {"kernel exponent", kernel_exponent},
      {"arc capacity consistency", arc_consistency},
      {"point polarity", point_polarity},
      {"capacitary inequalities", capacitary_inequalities},
      {"finite-mu cyclicity", finite_mu_cyclicity},
      {"determinism", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %2d %s: %s | %s\n", index, v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
