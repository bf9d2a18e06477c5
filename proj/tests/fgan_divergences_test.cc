// Copyright 2026 The Minimax Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minimax/fgan_divergences.h"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

namespace minimax {
namespace {

const double kLog4 = std::log(4.0);

// Stationary points of p f0(D) + q f1(D), solved by hand for each row.
const std::map<std::string, std::function<double(double, double)>> kAnalyticOptimum = {
    {"Kullback-Leibler", [](double p, double q) { return p / q; }},
    {"Reverse KL", [](double p, double q) { return q / p; }},
    {"Pearson chi^2", [](double p, double q) { return 2 * (p - q) / q; }},
    {"Squared Hellinger", [](double p, double q) { return std::sqrt(q / p); }},
    {"Jensen-Shannon", [](double p, double q) { return p / (p + q); }},
};

TEST(RegistryTest, SixRowsInOrder) {
  const auto& reg = Registry();
  ASSERT_EQ(reg.size(), 6u);
  const std::vector<std::string> names{"Kullback-Leibler",           "Reverse KL",     "Pearson chi^2",
                                       "Squared Hellinger", "Jensen-Shannon", "WGAN"};
  for (std::size_t i = 0; i < names.size(); ++i) EXPECT_EQ(reg[i].name, names[i]);
  EXPECT_THROW(FindDivergence("Total variation"), std::invalid_argument);
}

TEST(RegistryTest, TabulatedColumns) {
  struct Row {
    const char* name;
    double d_star, value;
  };
  for (const Row& row : {Row{"Kullback-Leibler", 1, 0}, Row{"Reverse KL", 1, -1}, Row{"Pearson chi^2", 0, 0},
                         Row{"Squared Hellinger", 1, 0}, Row{"Jensen-Shannon", 0.5, -kLog4},
                         Row{"WGAN", 0, 0}}) {
    const DivergenceSpec& s = FindDivergence(row.name);
    EXPECT_EQ(s.d_star, row.d_star) << row.name;
    EXPECT_DOUBLE_EQ(s.game_value, row.value) << row.name;
  }
  EXPECT_TRUE(FindDivergence("WGAN").linear_in_d);
}

TEST(RegistryTest, GeneratorFunctions) {
  EXPECT_DOUBLE_EQ(FindDivergence("Pearson chi^2").f1(2.0), -3.0);
  EXPECT_DOUBLE_EQ(FindDivergence("Kullback-Leibler").f0(std::exp(1.0)), 1.0);
  EXPECT_DOUBLE_EQ(FindDivergence("Kullback-Leibler").f1(0.25), 0.75);
  EXPECT_DOUBLE_EQ(FindDivergence("Reverse KL").f0(3.0), -3.0);
  EXPECT_DOUBLE_EQ(FindDivergence("Reverse KL").f1(1.0), 0.0);
  EXPECT_DOUBLE_EQ(FindDivergence("Squared Hellinger").f0(0.25), 0.75);
  EXPECT_DOUBLE_EQ(FindDivergence("Squared Hellinger").f1(0.25), -3.0);
  EXPECT_DOUBLE_EQ(FindDivergence("Jensen-Shannon").f1(0.5), std::log(0.5));
  EXPECT_DOUBLE_EQ(FindDivergence("WGAN").f0(7.0) + FindDivergence("WGAN").f1(7.0), 0.0);
}

TEST(RegistryTest, DerivativesMatchFiniteDifferences) {
  for (const DivergenceSpec& s : Registry()) {
    for (double d : {0.2, 0.5, 0.8}) {
      const double h = 1e-6;
      EXPECT_NEAR(s.df0(d), (s.f0(d + h) - s.f0(d - h)) / (2 * h), 1e-6) << s.name;
      EXPECT_NEAR(s.df1(d), (s.f1(d + h) - s.f1(d - h)) / (2 * h), 1e-6) << s.name;
    }
  }
}

TEST(EvalObjectiveTest, Examples) {
  std::mt19937_64 rng(1);
  const CategoricalDist p = CategoricalDist::RandomSimplex(5, rng);
  EXPECT_NEAR(EvalObjective(FindDivergence("Jensen-Shannon"), p, p, std::vector<double>(5, 0.5)),
              -kLog4, 1e-15);
  EXPECT_NEAR(EvalObjective(FindDivergence("WGAN"), p, p, std::vector<double>(5, 3.7)), 0.0,
              1e-15);
  EXPECT_NEAR(EvalObjective(FindDivergence("Kullback-Leibler"), p, p, std::vector<double>(5, 1.0)), 0.0,
              1e-15);
}

TEST(EvalObjectiveTest, DomainErrors) {
  const CategoricalDist p = CategoricalDist::Uniform(2);
  EXPECT_THROW(EvalObjective(FindDivergence("Squared Hellinger"), p, p, std::vector<double>{0, 1}),
               std::domain_error);
  EXPECT_THROW(EvalObjective(FindDivergence("Jensen-Shannon"), p, p, std::vector<double>{1, 0.5}),
               std::domain_error);
  EXPECT_THROW(EvalObjective(FindDivergence("Kullback-Leibler"), p, p, std::vector<double>{1.5, 0.5}),
               std::domain_error);
  EXPECT_THROW(EvalObjective(FindDivergence("Kullback-Leibler"), p, p, std::vector<double>{0.5}),
               std::invalid_argument);
}

TEST(EvalObjectiveTest, LinearInGenerator) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (const DivergenceSpec& s : Registry()) {
    const CategoricalDist p_d = CategoricalDist::RandomSimplex(4, rng);
    const CategoricalDist a = CategoricalDist::RandomSimplex(4, rng);
    const CategoricalDist b = CategoricalDist::RandomSimplex(4, rng);
    std::vector<double> d(4);
    for (double& v : d) v = u(rng);
    const double alpha = u(rng);
    std::vector<double> mix(4);
    for (int i = 0; i < 4; ++i) mix[i] = alpha * a[i] + (1 - alpha) * b[i];
    double sum = 0;
    for (double v : mix) sum += v;
    for (double& v : mix) v /= sum;
    EXPECT_NEAR(EvalObjective(s, p_d, CategoricalDist(mix), d),
                alpha * EvalObjective(s, p_d, a, d) + (1 - alpha) * EvalObjective(s, p_d, b, d),
                1e-12)
        << s.name;
  }
}

TEST(PointwiseOptimalDTest, Examples) {
  const DivergenceSpec& js = FindDivergence("Jensen-Shannon");
  EXPECT_NEAR(PointwiseOptimalD(js, 0.5, 0.5), 0.5, 1e-7);
  EXPECT_NEAR(PointwiseOptimalD(js, 0.75, 0.25), 0.75, 1e-7);
  for (double c : {0.01, 0.3, 2.0}) {
    EXPECT_NEAR(PointwiseOptimalD(FindDivergence("Pearson chi^2"), c, c), 0.0, 1e-6);
  }
  EXPECT_EQ(PointwiseOptimalD(FindDivergence("WGAN"), 0.2, 0.7), 0.0);
  EXPECT_THROW(PointwiseOptimalD(js, 0.0, 0.0), std::invalid_argument);
}

TEST(PointwiseOptimalDTest, JensenShannonMatchesRatio) {
  const DivergenceSpec& js = FindDivergence("Jensen-Shannon");
  for (int i = 1; i < 20; ++i) {
    for (int j = 1; j < 20; ++j) {
      const double p = i / 20.0, q = j / 20.0;
      const std::vector<double> eq4 =
          OptimalDiscriminatorValues(CategoricalDist({p / (p + q), q / (p + q)}),
                                     CategoricalDist({q / (p + q), p / (p + q)}));
      EXPECT_NEAR(PointwiseOptimalD(js, p, q), p / (p + q), 1e-6);
      EXPECT_NEAR(PointwiseOptimalD(js, p, q), eq4[0], 1e-6);
    }
  }
}

TEST(PointwiseOptimalDTest, MatchesAnalyticStationaryPoints) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (const auto& [name, optimum] : kAnalyticOptimum) {
    const DivergenceSpec& s = FindDivergence(name);
    for (int k = 0; k < 200; ++k) {
      const double p = u(rng), q = u(rng);
      double expected = optimum(p, q);
      // Outside the domain the maximizer sits on the nearer bound.
      expected = std::clamp(expected, s.d_domain.lo, s.d_domain.hi);
      EXPECT_NEAR(PointwiseOptimalD(s, p, q), expected, 1e-6 * std::max(1.0, std::abs(expected)))
          << name << " p=" << p << " q=" << q;
    }
  }
}

// At most one sign change of the derivative on a 1e-3 grid.
TEST(PointwiseOptimalDTest, ObjectiveIsUnimodal) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (const DivergenceSpec& s : Registry()) {
    if (s.linear_in_d) continue;
    const double lo = s.d_domain.lo, hi = std::min(s.d_domain.hi, 10.0);
    for (int k = 0; k < 20; ++k) {
      const double p = u(rng), q = u(rng);
      int changes = 0;
      double previous = 0;
      for (double d = lo + 1e-3; d < hi; d += 1e-3) {
        const double g = p * s.df0(d) + q * s.df1(d);
        if (previous != 0 && g != 0 && (g > 0) != (previous > 0)) ++changes;
        if (g != 0) previous = g;
      }
      EXPECT_LE(changes, 1) << s.name;
    }
  }
}

TEST(CheckFixedPointTest, EveryRowPasses) {
  for (const DivergenceSpec& s : Registry()) {
    const FixedPointReport report = CheckFixedPoint(s);
    EXPECT_TRUE(report.d_star_ok) << s.name << " residual " << report.max_d_residual;
    EXPECT_TRUE(report.value_ok) << s.name << " residual " << report.value_residual;
    EXPECT_LE(report.max_d_residual, kFixedPointTolerance);
    EXPECT_LE(report.value_residual, kFixedPointTolerance);
    EXPECT_EQ(report.computed_d.size(), 8u);
  }
  EXPECT_NEAR(CheckFixedPoint(FindDivergence("Squared Hellinger")).computed_value, 0.0, 1e-6);
  EXPECT_EQ(CheckFixedPoint(FindDivergence("WGAN")).computed_value, 0.0);
}

TEST(CheckFixedPointTest, SeedsAgree) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    for (const DivergenceSpec& s : Registry()) {
      EXPECT_TRUE(CheckFixedPoint(s, seed, 16).value_ok) << s.name << " seed " << seed;
    }
  }
}

}  // namespace
}  // namespace minimax
