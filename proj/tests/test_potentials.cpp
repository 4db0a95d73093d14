#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "wds/potentials.hpp"

using namespace wds;

namespace {

SuperharmonicWeight atom_at(cplx w, double mass = 1.0) { return family::atomic({{w, mass}}); }

SuperharmonicWeight random_atomic(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<DiscAtom> atoms;
  for (int k = 0; k < count; ++k)
    atoms.push_back({std::polar(0.95 * std::sqrt(u(rng)), kTwoPi * u(rng)), 0.1 + u(rng)});
  return family::atomic(atoms);
}

SuperharmonicWeight nu_atom(double angle) { return family::point_mass_harmonic(angle, 1.0); }

}  // namespace

TEST(Green, ZeroMeasure) {
  const PotentialEvaluator ev(SuperharmonicWeight{});
  EXPECT_EQ(ev.green(cplx(0.3, 0.2)).get(), 0.0);
}

TEST(Green, AtomAtHalf) {
  const PotentialEvaluator ev(atom_at(0.5));
  EXPECT_NEAR(ev.green(cplx(0.0)).get(), 2.0 * std::log(2.0), 1e-14);
}

TEST(Green, PoleAtAtom) {
  const PotentialEvaluator ev(atom_at(cplx(0.2, 0.1)));
  EXPECT_TRUE(ev.green(cplx(0.2, 0.1)).infinite);
}

TEST(Green, SymmetricInPointAndAtom) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const cplx z = std::polar(0.98 * u(rng), kTwoPi * u(rng));
    const cplx w = std::polar(0.98 * u(rng), kTwoPi * u(rng));
    const double a = PotentialEvaluator(atom_at(w)).green(z).get();
    const double b = PotentialEvaluator(atom_at(z)).green(w).get();
    EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, a));
  }
}

TEST(Green, Superharmonic) {
  std::mt19937_64 rng(5);
  const PotentialEvaluator atomic(random_atomic(rng, 4));
  const PotentialEvaluator alpha(family::standard_alpha(0.5));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto* ev : {&atomic, &alpha})
    for (int k = 0; k < 20; ++k) {
      const cplx z = std::polar(0.8 * u(rng), kTwoPi * u(rng));
      const double center = ev->green(z).get();
      if (!std::isfinite(center)) continue;
      double avg = 0.0;
      constexpr int m = 256;
      for (int j = 0; j < m; ++j) avg += ev->green(z + std::polar(0.05, kTwoPi * j / m)).get() / m;
      EXPECT_LE(avg, center * (1.0 + 1e-9) + 1e-12);
    }
}

TEST(Green, StandardAlphaRecoversWeight) {
  const PotentialEvaluator ev(family::standard_alpha(0.5));
  for (double r : {0.0, 0.3, 0.7, 0.95})
    EXPECT_NEAR(ev.green(cplx(r)).get(), std::sqrt(1.0 - r * r), 1e-8);
}

TEST(Poisson, AtomAtCenter) {
  EXPECT_NEAR(PotentialEvaluator(nu_atom(1.3)).poisson(cplx(0.0)), 1.0, 1e-15);
}

TEST(Poisson, ArcLengthIsOne) {
  const PotentialEvaluator ev(family::classical());
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k)
    EXPECT_NEAR(ev.poisson(std::polar(0.999 * std::sqrt(u(rng)), kTwoPi * u(rng))), 1.0, 1e-10);
}

TEST(Poisson, AtomAtOneOnRealAxis) {
  EXPECT_NEAR(PotentialEvaluator(nu_atom(0.0)).poisson(cplx(0.5)), 3.0, 1e-13);
}

TEST(VMu, ClosedForms) {
  const PotentialEvaluator zero(SuperharmonicWeight{});
  EXPECT_EQ(zero.v_mu(cplx(0.4)), 0.0);
  EXPECT_EQ(zero.psi_mu(cplx(0.4)), 0.0);
  const PotentialEvaluator d0(atom_at(0.0));
  EXPECT_NEAR(d0.v_mu(cplx(0.0)), 1.0, 1e-15);
  EXPECT_NEAR(d0.psi_mu(cplx(0.0)), 1.0, 1e-15);
  EXPECT_NEAR(d0.v_mu(cplx(0.3, 0.4)), 0.75, 1e-15);
  EXPECT_NEAR(PotentialEvaluator(atom_at(0.5)).v_mu(cplx(0.5)), 1.0, 1e-14);
}

TEST(VMu, BelowPsiAndCrudeBound) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const SuperharmonicWeight w = random_atomic(rng, 5);
    const PotentialEvaluator ev(w);
    const double moment = riesz_moment(w.mu).get();
    for (int k = 0; k < 20; ++k) {
      const cplx z = std::polar(0.99 * u(rng), kTwoPi * u(rng));
      const double v = ev.v_mu(z), r = std::abs(z);
      EXPECT_LE(v, ev.psi_mu(z) * (1.0 + 1e-14));
      EXPECT_LE(v, (1.0 + r) / (1.0 - r) * moment * (1.0 + 1e-12));
    }
  }
}

TEST(VR, ClosedFormAndMonotoneLimit) {
  const PotentialEvaluator ev(nu_atom(0.0));
  EXPECT_NEAR(ev.v_r(cplx(0.0), 0.5), 0.25, 1e-15);
  // Increasing in r toward the Poisson integral.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const cplx z = std::polar(0.8 * u(rng), kTwoPi * u(rng));
    double prev = 0.0;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
      const double v = ev.v_r(z, r);
      EXPECT_GE(v, prev);
      prev = v;
    }
    EXPECT_NEAR(ev.v_r(z, 0.999), ev.poisson(z), 0.02 * ev.poisson(z));
  }
}

TEST(Balayage, ClosedFormsAndFubini) {
  EXPECT_EQ(PotentialEvaluator(SuperharmonicWeight{}).balayage(0.3).get(), 0.0);
  const PotentialEvaluator d0(atom_at(0.0));
  for (double a : {0.0, 1.0, 4.0}) EXPECT_NEAR(d0.balayage(a).get(), 1.0, 1e-15);
  const PotentialEvaluator half(atom_at(0.5));
  constexpr int m = 512;
  double mean = 0.0;
  for (int j = 0; j < m; ++j) mean += half.balayage(kTwoPi * j / m).get() / m;
  EXPECT_NEAR(mean, oracle::kBalayageHalfMean, 1e-8);
}

TEST(Balayage, StandardAlphaIsInfinite) {
  EXPECT_TRUE(PotentialEvaluator(family::standard_alpha(0.5)).balayage(0.0).infinite);
}

TEST(AMu, ClosedFormsAndSymmetry) {
  const PotentialEvaluator d0(atom_at(0.0));
  EXPECT_NEAR(d0.a_mu(0.2, 2.9).get(), 1.0, 1e-15);
  EXPECT_NEAR(PotentialEvaluator(atom_at(0.5)).a_mu(0.0, 0.0).get(), 9.0, 1e-12);
  std::mt19937_64 rng(6);
  const PotentialEvaluator ev(random_atomic(rng, 4));
  const PotentialEvaluator sa(family::standard_alpha(0.5));
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int k = 0; k < 30; ++k) {
    const double s = u(rng), t = u(rng);
    EXPECT_NEAR(ev.a_mu(s, t).get(), ev.a_mu(t, s).get(), 1e-12 * ev.a_mu(s, t).get());
    EXPECT_NEAR(sa.a_mu(s, t).get(), sa.a_mu(t, s).get(), 1e-10 * sa.a_mu(s, t).get());
  }
}

TEST(FProfile, ClosedFormAndMonotonicity) {
  EXPECT_EQ(PotentialEvaluator(SuperharmonicWeight{}).f_mu_profile(0.5, 0.0), 0.0);
  const PotentialEvaluator d0(atom_at(0.0));
  for (double y : {0.01, 0.3, 1.0, 3.0}) EXPECT_NEAR(d0.f_mu_profile(y, 0.0), y * y / (1 + y * y), 1e-15);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const PotentialEvaluator ev(random_atomic(rng, 6));
    double prev = 0.0, prev_ratio = kInf;
    for (int k = 63; k >= 0; --k) {
      const double y = kPi * std::pow(2.0, -k / 4.0);
      const double f = ev.f_mu_profile(y, 0.7);
      EXPECT_GE(f, prev * (1.0 - 1e-13));
      EXPECT_LE(f / (y * y), prev_ratio * (1.0 + 1e-13));
      prev = f;
      prev_ratio = f / (y * y);
    }
  }
}

TEST(FProfile, ComparableToRadialVMu) {
  std::mt19937_64 rng(13);
  double lo = kInf, hi = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const PotentialEvaluator ev(random_atomic(rng, 5));
    for (int k = 1; k <= 30; ++k) {
      const double y = std::ldexp(1.0, -k);
      const double ratio = ev.f_mu_profile(y, 0.0) / (y * ev.v_mu(cplx(1.0 - y)));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  EXPECT_GE(lo, 1.0 / 16.0);
  EXPECT_LE(hi, 16.0);
  RecordProperty("ratio_min", std::to_string(lo));
  RecordProperty("ratio_max", std::to_string(hi));
}
