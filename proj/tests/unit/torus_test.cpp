// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/torus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace openbaker {
namespace {

void expect_point(PhasePoint got, double q, double p) {
  EXPECT_DOUBLE_EQ(got.q, q);
  EXPECT_DOUBLE_EQ(got.p, p);
}

TEST(BakerMapTest, ForwardBranches) {
  expect_point(baker_forward({0.25, 0.5}), 0.5, 0.25);
  expect_point(baker_forward({0.75, 0.0}), 0.5, 0.5);
  expect_point(baker_forward({0.0, 0.0}), 0.0, 0.0);
}

TEST(BakerMapTest, InverseBranches) {
  expect_point(baker_inverse({0.5, 0.25}), 0.25, 0.5);
  expect_point(baker_inverse({0.5, 0.5}), 0.75, 0.0);
  const PhasePoint x = baker_inverse({1.0 / 3.0, 2.0 / 3.0});
  EXPECT_NEAR(x.q, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(x.p, 1.0 / 3.0, 1e-15);
  const PhasePoint y = baker_forward(baker_forward({1.0 / 3.0, 2.0 / 3.0}));
  EXPECT_NEAR(y.q, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(y.p, 2.0 / 3.0, 1e-15);
}

TEST(BakerMapTest, RoundTripOnAMillionPoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1'000'000; ++i) {
    const PhasePoint x{u(rng), u(rng)};
    const PhasePoint y = baker_inverse(baker_forward(x));
    const PhasePoint z = baker_forward(baker_inverse(x));
    worst = std::max({worst, std::abs(y.q - x.q), std::abs(y.p - x.p), std::abs(z.q - x.q), std::abs(z.p - x.p)});
    ASSERT_TRUE(y.q >= 0.0 && y.q < 1.0 && y.p >= 0.0 && y.p < 1.0);
  }
  EXPECT_LE(worst, 1e-12);
}

double ks_uniform(std::vector<double>& sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    d = std::max({d, static_cast<double>(i + 1) / n - sample[i], sample[i] - static_cast<double>(i) / n});
  }
  return d;
}

TEST(BakerMapTest, PushForwardOfUniformSampleStaysUniform) {
  constexpr std::size_t kSamples = 10'000'000;
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> qs(kSamples);
  std::vector<double> ps(kSamples);
  for (std::size_t i = 0; i < kSamples; ++i) {
    const PhasePoint y = baker_forward({u(rng), u(rng)});
    qs[i] = y.q;
    ps[i] = y.p;
  }
  // Critical value of the one-sample Kolmogorov-Smirnov test at level 1e-3.
  const double critical = 1.95 / std::sqrt(static_cast<double>(kSamples));
  EXPECT_LT(ks_uniform(qs), critical);
  EXPECT_LT(ks_uniform(ps), critical);
}

TEST(BakerMapTest, ConjugationSymmetry) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tested = 0;
  while (tested < 100'000) {
    const PhasePoint x{u(rng), u(rng)};
    if (x.q < 1e-9 || std::abs(x.q - 0.5) < 1e-9 || x.q > 1 - 1e-9 || x.p < 1e-9) continue;
    const PhasePoint a = baker_forward({1.0 - x.q, 1.0 - x.p});
    const PhasePoint fx = baker_forward(x);
    ASSERT_NEAR(a.q, 1.0 - fx.q, 1e-12);
    ASSERT_NEAR(a.p, 1.0 - fx.p, 1e-12);
    ++tested;
  }
}

TEST(OpeningTest, Membership) {
  const OpeningSpec centre(0.5, 0.1);
  EXPECT_TRUE(in_opening({0.5, 0.3}, centre));
  EXPECT_FALSE(in_opening({0.44, 0.3}, centre));
  EXPECT_TRUE(in_opening({0.45, 0.0}, centre));
  EXPECT_FALSE(in_opening({0.55, 0.0}, centre));
  const OpeningSpec wrapped(0.0, 0.1);
  EXPECT_TRUE(in_opening({0.97, 0.9}, wrapped));
  EXPECT_TRUE(in_opening({0.0, 0.9}, wrapped));
  EXPECT_TRUE(in_opening({0.049, 0.9}, wrapped));
  EXPECT_FALSE(in_opening({0.05, 0.9}, wrapped));
  EXPECT_FALSE(in_opening({0.949, 0.9}, wrapped));
}

TEST(OpeningTest, ExactArcs) {
  const auto arcs = OpeningSpec(Rational(0), Rational(1, 10)).hole_arcs();
  ASSERT_EQ(arcs.size(), 2u);
  EXPECT_EQ(arcs[0].lo, Rational(0));
  EXPECT_EQ(arcs[0].hi, Rational(1, 20));
  EXPECT_EQ(arcs[1].lo, Rational(19, 20));
  EXPECT_EQ(arcs[1].hi, Rational(1));
  const auto complement = OpeningSpec(Rational(1, 2), Rational(1, 10)).complement_arcs();
  ASSERT_EQ(complement.size(), 2u);
  EXPECT_EQ(complement[0].hi, Rational(9, 20));
  EXPECT_EQ(complement[1].lo, Rational(11, 20));
}

TEST(OpeningTest, ClosedAndFull) {
  EXPECT_TRUE(OpeningSpec::closed().is_closed());
  EXPECT_TRUE(OpeningSpec::closed().hole_arcs().empty());
  EXPECT_FALSE(in_opening({0.3, 0.3}, OpeningSpec::closed()));
  const OpeningSpec full(0.3, 1.0);
  EXPECT_TRUE(full.removes_everything());
  EXPECT_TRUE(in_opening({0.0, 0.0}, full));
  EXPECT_TRUE(in_opening({0.99, 0.0}, full));
  EXPECT_TRUE(full.complement_arcs().empty());
}

TEST(OpeningTest, RejectsOutOfRangeParameters) {
  EXPECT_THROW(OpeningSpec(0.5, -0.1), std::invalid_argument);
  EXPECT_THROW(OpeningSpec(0.5, 1.5), std::invalid_argument);
  EXPECT_THROW(OpeningSpec(-0.1, 0.1), std::invalid_argument);
}

TEST(SurvivalTimeTest, Examples) {
  EXPECT_FALSE(survival_time({0.0, 0.0}, OpeningSpec(0.5, 0.1), 100).has_value());
  EXPECT_EQ(survival_time({0.5, 0.2}, OpeningSpec(0.5, 0.1), 10), 0);
  EXPECT_EQ(survival_time({0.25, 0.7}, OpeningSpec(0.5, 0.1), 10), 1);
  EXPECT_FALSE(survival_time({0.5, 0.2}, OpeningSpec(0.5, 0.1), 0).has_value());
  EXPECT_THROW(survival_time({0.5, 0.2}, OpeningSpec(0.5, 0.1), -1), std::invalid_argument);
}

TEST(SurvivalTimeTest, MonotoneInOpeningWidth) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<double> widths = {0.0, 0.02, 0.05, 0.1, 0.2, 0.4};
  for (int i = 0; i < 20'000; ++i) {
    const PhasePoint x{u(rng), u(rng)};
    const double centre = std::floor(u(rng) * 100.0) / 100.0;
    std::int64_t previous = 1000;
    for (double w : widths) {
      const auto t = survival_time(x, OpeningSpec(centre, w), 40);
      const std::int64_t value = t.value_or(1000);
      ASSERT_LE(value, previous) << "q=" << x.q << " centre=" << centre << " width=" << w;
      previous = value;
    }
  }
}

}  // namespace
}  // namespace openbaker
