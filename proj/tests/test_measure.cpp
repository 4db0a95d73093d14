#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "wds/config.hpp"
#include "wds/measure.hpp"
#include "wds/quadrature.hpp"

using namespace wds;

TEST(RieszMoment, ZeroMeasure) {
  EXPECT_EQ(riesz_moment(DiscMeasure{}).get(), 0.0);
}

TEST(RieszMoment, SingleAtom) {
  const DiscMeasure mu{{{0.5, 1.0}}, std::nullopt};
  EXPECT_NEAR(riesz_moment(mu).get(), 0.75, 1e-15);
}

TEST(RieszMoment, DesignedAtomicMatchesDirectSum) {
  const Extended m = riesz_moment(family::designed_atomic(0.0, 10));
  EXPECT_FALSE(m.infinite);
  EXPECT_NEAR(m.get(), oracle::kRieszDesigned10, 1e-12 * oracle::kRieszDesigned10);
}

TEST(RieszMoment, AdditiveOverAtomLists) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    DiscMeasure a, b, both;
    for (int k = 0; k < 5; ++k) {
      const DiscAtom at{std::polar(0.99 * u(rng), 6.0 * u(rng)), 3.0 * u(rng)};
      (k % 2 ? a : b).atoms.push_back(at);
      both.atoms.push_back(at);
    }
    EXPECT_NEAR(riesz_moment(both).get(), riesz_moment(a).get() + riesz_moment(b).get(), 1e-13);
  }
}

TEST(RieszMoment, StandardAlphaFinite) {
  const double alphas[] = {0.05, 0.25, 0.5, 0.75, 0.95};
  const double want[] = {oracle::kStandardMoment0, oracle::kStandardMoment1, oracle::kStandardMoment2,
                         oracle::kStandardMoment3, oracle::kStandardMoment4};
  for (int k = 0; k < 5; ++k) {
    const Extended m = riesz_moment(family::standard_alpha_measure(alphas[k]));
    EXPECT_FALSE(m.infinite) << alphas[k];
    EXPECT_NEAR(m.get(), want[k], 1e-8 * want[k]) << alphas[k];
  }
}

TEST(RieszMoment, NonIntegrableDensityDiverges) {
  DiscMeasure mu = family::standard_alpha_measure(0.5, 40);
  for (std::size_t i = 0; i < mu.density->values.size(); ++i) {
    const double d = mu.density->grid.delta[i];
    mu.density->values[i] = 1.0 / (d * d);
  }
  EXPECT_TRUE(riesz_moment(mu).infinite);
}

TEST(Measure, AtomOnCircleRejected) {
  DiscMeasure mu{{{1.0, 1.0}}, std::nullopt};
  EXPECT_THROW(mu.validate(), std::invalid_argument);
  mu.atoms[0].mass = -1.0;
  mu.atoms[0].position = 0.5;
  EXPECT_THROW(mu.validate(), std::invalid_argument);
}

TEST(Measure, BoundaryAtomAnglesDistinct) {
  BoundaryMeasure nu{{{1.0, 1.0}, {1.0, 2.0}}, {}};
  EXPECT_THROW(nu.validate(), std::invalid_argument);
  nu.atoms[1].angle = 2.0;
  EXPECT_NO_THROW(nu.validate());
  EXPECT_DOUBLE_EQ(nu.total_mass(), 3.0);
}

TEST(Measure, ZeroMeasuresAreLegal) {
  SuperharmonicWeight w;
  EXPECT_NO_THROW(w.validate());
  EXPECT_TRUE(w.is_zero());
}

TEST(StandardAlpha, DensityMatchesSymbolicLaplacian) {
  const double expected[] = {oracle::kStandardHalfDensity0, oracle::kStandardHalfDensity1,
                             oracle::kStandardHalfDensity2, oracle::kStandardHalfDensity3};
  const double radii[] = {0.1, 0.5, 0.9, 0.999};
  for (int k = 0; k < 4; ++k)
    EXPECT_NEAR(standard_alpha_density(0.5, 1.0 - radii[k]), expected[k], 1e-12 * expected[k]);
}

TEST(QuadratureGrid, ConstantReproducesArea) {
  for (int blocks : {8, 32, 128})
    for (int order : {4, 16}) {
      const QuadratureGrid g = QuadratureGrid::dyadic(blocks, order, 8);
      EXPECT_NEAR(g.total_weight(), g.covered_area(), 1e-10 * g.covered_area());
      EXPECT_EQ(g.size(), g.radial_size() * 8);
    }
}

TEST(QuadratureGrid, RadialNodesRefineTowardBoundary) {
  const QuadratureGrid g = QuadratureGrid::dyadic(20, 8);
  for (std::size_t i = 1; i < g.radial_size(); ++i) EXPECT_LT(g.delta[i], g.delta[i - 1]) << i;
  EXPECT_LT(g.delta.back(), std::ldexp(1.0, -19));
  EXPECT_GT(g.delta.back(), std::ldexp(1.0, -20));
}

TEST(Config, ClassicalFamily) {
  const Scenario s = parse_config("weight = classical\n");
  EXPECT_TRUE(s.weight.mu.is_zero());
  ASSERT_TRUE(s.weight.nu.uniform_level().has_value());
  EXPECT_DOUBLE_EQ(*s.weight.nu.uniform_level(), 1.0);
}

TEST(Config, StandardAlphaDensityOnGrid) {
  const Scenario s = parse_config("weight = standard-alpha\nalpha = 0.5\ngrid.radial_blocks = 40\n");
  ASSERT_TRUE(s.weight.mu.density.has_value());
  const DiscDensity& d = *s.weight.mu.density;
  ASSERT_EQ(d.values.size(), d.grid.radial_size());
  for (std::size_t i = 0; i < d.grid.radial_size(); ++i) {
    // alpha (1 - r^2)^(alpha - 2) (1 - alpha r^2) with 1 - r^2 = delta (2 - delta).
    const double delta = d.grid.delta[i], r = 1.0 - delta;
    const double want = 0.5 * std::pow(delta * (2.0 - delta), -1.5) * (1.0 - 0.5 * r * r);
    EXPECT_NEAR(d.values[i], want, 1e-9 * want) << i;
  }
}

TEST(Config, AtomOnCircleRejectedWithKey) {
  try {
    parse_config("weight = atomic\nmu.atom = 1.0 0 1\n");
    FAIL() << "expected rejection";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "mu.atom");
  }
}

TEST(Config, SchemaErrorsNameTheKey) {
  const std::pair<const char*, const char*> cases[] = {
      {"colour = red\n", "colour"},
      {"grid.n = 1000\n", "grid.n"},
      {"tolerance = abc\n", "tolerance"},
      {"seed = 1\nseed = 2\n", "seed"},
      {"weight = standard-alpha\nalpha = 1.5\n", "alpha"},
      {"weight = nonsense\n", "weight"},
  };
  for (const auto& [text, key] : cases) {
    try {
      parse_config(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.key(), key) << text;
    }
  }
}

TEST(Config, ExplicitAtomsAndPoints) {
  const Scenario s = parse_config(
      "# comment\nweight = atomic\nmu.atom = 0.5 0 1\nmu.atom = 0 0.25 2  # trailing\n"
      "nu.atom = 1.0 0.5\npoints = 0 0; 0.1 -0.2\nseed = 9\n");
  EXPECT_EQ(s.weight.mu.atoms.size(), 2u);
  EXPECT_EQ(s.weight.nu.atoms.size(), 1u);
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[1], cplx(0.1, -0.2));
  EXPECT_EQ(s.seed, 9u);
}
