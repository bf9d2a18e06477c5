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

#include "minimax/gan_discrete.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

namespace minimax {
namespace {

const double kLog4 = std::log(4.0);
constexpr double kDelta = kDiscriminatorClamp;

std::vector<double> Values(const DiscriminatorTable& d) {
  return {d.values().begin(), d.values().end()};
}

std::size_t DeltaIndex(const CategoricalDist& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 1.0) return i;
  }
  return p.size();
}

// Direct evaluation from the definition, independent of Jsd().
double KlDirect(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) s += p[i] * std::log(p[i] / q[i]);
  }
  return s;
}

TEST(CategoricalDistTest, Validation) {
  EXPECT_THROW(CategoricalDist({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(CategoricalDist({-0.1, 1.1}), std::invalid_argument);
  EXPECT_THROW(CategoricalDist(std::vector<std::int64_t>{0, 0}, {0.5, 0.5}),
               std::invalid_argument);
  EXPECT_THROW(CategoricalDist(std::vector<std::int64_t>{0, 1, 2}, {0.5, 0.5}),
               std::invalid_argument);
  const CategoricalDist b = CategoricalDist::Bernoulli(0.25);
  EXPECT_DOUBLE_EQ(b[0], 0.75);
  EXPECT_DOUBLE_EQ(b[1], 0.25);
}

TEST(CategoricalDistTest, RandomSimplexIsValid) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const CategoricalDist p = CategoricalDist::RandomSimplex(16, rng);
    double s = 0;
    for (double v : p.pmf()) {
      EXPECT_GE(v, 0.0);
      s += v;
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(DiscriminatorTableTest, ClampsOnConstruction) {
  const std::vector<double> raw{0.0, 1.0, 0.4};
  const DiscriminatorTable d({0, 1, 2}, raw);
  EXPECT_EQ(d[0], kDelta);
  EXPECT_EQ(d[1], 1.0 - kDelta);
  EXPECT_EQ(d[2], 0.4);
  const std::vector<double> bad{NAN};
  EXPECT_THROW(DiscriminatorTable({0}, bad), std::invalid_argument);
}

TEST(GanValueTest, Examples) {
  const CategoricalDist p = CategoricalDist({0.2, 0.3, 0.5});
  EXPECT_NEAR(GanValue(p, p, DiscriminatorTable::Constant(p, 0.5)), -kLog4, 1e-15);

  const std::vector<double> d_raw{1.0, 0.0};
  const double v = GanValue(CategoricalDist::Delta(2, 0), CategoricalDist::Delta(2, 1),
                            DiscriminatorTable({0, 1}, d_raw));
  EXPECT_NEAR(v, 2 * std::log1p(-kDelta), 1e-15);
  EXPECT_LT(v, 0.0);
  EXPECT_GT(v, -1e-6);
}

TEST(GanValueTest, SupportMismatch) {
  const CategoricalDist a({0.5, 0.5});
  const CategoricalDist b(std::vector<std::int64_t>{3, 4}, {0.5, 0.5});
  EXPECT_THROW(GanValue(a, b, DiscriminatorTable::Constant(a, 0.5)), std::invalid_argument);
  EXPECT_THROW(GanValue(a, a, DiscriminatorTable::Constant(b, 0.5)), std::invalid_argument);
  EXPECT_THROW(Jsd(a, b), std::invalid_argument);
}

TEST(OptimalDiscriminatorTest, Examples) {
  const CategoricalDist p_d = CategoricalDist::Bernoulli(0.25);
  const std::vector<double> raw =
      OptimalDiscriminatorValues(p_d, CategoricalDist::Delta(2, 0));
  EXPECT_EQ(raw[1], 1.0);
  EXPECT_DOUBLE_EQ(raw[0], 3.0 / 7.0);
  EXPECT_EQ(OptimalDiscriminator(p_d, CategoricalDist::Delta(2, 0))[1], 1.0 - kDelta);

  for (double v : Values(OptimalDiscriminator(p_d, p_d))) EXPECT_EQ(v, 0.5);

  const std::vector<double> both_zero = OptimalDiscriminatorValues(
      CategoricalDist::Delta(3, 0), CategoricalDist::Delta(3, 0));
  EXPECT_EQ(both_zero, (std::vector<double>{0.5, 0.5, 0.5}));
}

TEST(OptimalDiscriminatorTest, HalfExactlyWhereMassesAgree) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const CategoricalDist p_d = CategoricalDist::RandomSimplex(5, rng);
    std::vector<double> g(p_d.pmf().begin(), p_d.pmf().end());
    std::swap(g[0], g[1]);
    const CategoricalDist p_g(g);
    const std::vector<double> d = OptimalDiscriminatorValues(p_d, p_g);
    for (std::size_t i = 0; i < 5; ++i) {
      if (p_d[i] == p_g[i]) {
        EXPECT_EQ(d[i], 0.5);
      } else {
        EXPECT_EQ(d[i] > 0.5, p_d[i] > p_g[i]);
        EXPECT_NE(d[i], 0.5);
      }
    }
  }
}

// Every table on a 0.01 grid scores no better than the closed form.
TEST(OptimalDiscriminatorTest, BeatsEveryGridTable) {
  std::mt19937_64 rng(3);
  for (std::size_t size : {2u, 3u}) {
    for (int trial = 0; trial < (size == 2 ? 10 : 2); ++trial) {
      const CategoricalDist p_d = CategoricalDist::RandomSimplex(size, rng);
      const CategoricalDist p_g = CategoricalDist::RandomSimplex(size, rng);
      const double best = GanValue(p_d, p_g, OptimalDiscriminator(p_d, p_g));
      std::vector<double> d(size);
      std::vector<int> idx(size, 1);
      std::vector<std::int64_t> labels(size);
      for (std::size_t i = 0; i < size; ++i) labels[i] = static_cast<std::int64_t>(i);
      double grid_best = -INFINITY;
      while (true) {
        for (std::size_t i = 0; i < size; ++i) d[i] = idx[i] / 100.0;
        grid_best = std::max(grid_best, GanValue(p_d, p_g, DiscriminatorTable(labels, d)));
        std::size_t pos = 0;
        while (pos < size && ++idx[pos] > 99) idx[pos++] = 1;
        if (pos == size) break;
      }
      EXPECT_GE(best, grid_best - 1e-12);
      EXPECT_LE(best - grid_best, 1e-3);
    }
  }
}

TEST(GeneratorBestResponseTest, MassGoesWhereDiscriminatorIsLargest) {
  const std::vector<double> a{0.3, 0.9};
  EXPECT_EQ(DeltaIndex(GeneratorBestResponse(DiscriminatorTable({0, 1}, a))), 1u);
  const std::vector<double> b{1.0, 0.43};
  EXPECT_EQ(DeltaIndex(GeneratorBestResponse(DiscriminatorTable({0, 1}, b))), 0u);
  const std::vector<double> half{0.5, 0.5, 0.5};
  EXPECT_EQ(DeltaIndex(GeneratorBestResponse(DiscriminatorTable({0, 1, 2}, half))), 0u);
}

TEST(GeneratorBestResponseTest, MinimizesGanValueOverPureGenerators) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 100; ++k) {
    std::vector<double> v(6);
    for (double& x : v) x = u(rng);
    const DiscriminatorTable d({0, 1, 2, 3, 4, 5}, v);
    const CategoricalDist p_d = CategoricalDist::RandomSimplex(6, rng);
    const double br = GanValue(p_d, GeneratorBestResponse(d), d);
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_LE(br, GanValue(p_d, CategoricalDist::Delta(6, i), d) + 1e-15);
    }
  }
}

TEST(JsdTest, Examples) {
  const CategoricalDist p({0.1, 0.9});
  EXPECT_EQ(Jsd(p, p), 0.0);
  EXPECT_NEAR(Jsd(CategoricalDist::Delta(2, 0), CategoricalDist::Delta(2, 1)), std::log(2.0),
              1e-15);
}

TEST(JsdTest, Properties) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 300; ++k) {
    const CategoricalDist p = CategoricalDist::RandomSimplex(4, rng);
    const CategoricalDist q = CategoricalDist::RandomSimplex(4, rng);
    const double j = Jsd(p, q);
    EXPECT_NEAR(j, Jsd(q, p), 1e-15);
    EXPECT_GT(j, 0.0);
    EXPECT_LE(j, std::log(2.0));
    std::vector<double> pv(p.pmf().begin(), p.pmf().end()), qv(q.pmf().begin(), q.pmf().end()),
        m(4);
    for (int i = 0; i < 4; ++i) m[i] = 0.5 * (pv[i] + qv[i]);
    EXPECT_NEAR(j, 0.5 * KlDirect(pv, m) + 0.5 * KlDirect(qv, m), 1e-14);
  }
}

TEST(JsdTest, ValueAtOptimumIdentity) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const CategoricalDist p = CategoricalDist::RandomSimplex(7, rng);
    const CategoricalDist q = CategoricalDist::RandomSimplex(7, rng);
    EXPECT_NEAR(GanValueAtOptimum(p, q), 2 * Jsd(q, p) - kLog4, 1e-9);
    // With full support the clamp never engages.
    EXPECT_NEAR(GanValue(p, q, OptimalDiscriminator(p, q)), 2 * Jsd(q, p) - kLog4, 1e-9);
  }
  // Disjoint supports need the unclamped value.
  EXPECT_NEAR(GanValueAtOptimum(CategoricalDist::Delta(2, 0), CategoricalDist::Delta(2, 1)),
              2 * std::log(2.0) - kLog4, 1e-15);
}

TEST(JsdTest, AveragedObjectiveIsLinear) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  const CategoricalDist p_d = CategoricalDist::RandomSimplex(5, rng);
  std::vector<double> dv(5);
  for (double& x : dv) x = u(rng);
  const DiscriminatorTable d({0, 1, 2, 3, 4}, dv);
  std::vector<double> mean(5, 0.0);
  double mean_value = 0.0;
  const int n = 40;
  for (int w = 0; w < n; ++w) {
    const CategoricalDist g = CategoricalDist::RandomSimplex(5, rng);
    for (int i = 0; i < 5; ++i) mean[i] += g[i] / n;
    mean_value += GanValue(p_d, g, d) / n;
  }
  double s = 0;
  for (double v : mean) s += v;
  for (double& v : mean) v /= s;
  EXPECT_NEAR(GanValue(p_d, CategoricalDist(mean), d), mean_value, 1e-12);
}

TEST(BestResponseGanTest, BernoulliOscillates) {
  const BestResponseTrace trace = RunBestResponseGan(
      CategoricalDist::Bernoulli(0.25), CategoricalDist::Bernoulli(0.1), 101);
  ASSERT_EQ(trace.generators.size(), 101u);
  for (std::size_t k = 1; k < trace.generators.size(); ++k) {
    ASSERT_EQ(DeltaIndex(trace.generators[k]), k % 2 == 1 ? 1u : 0u) << "iteration " << k;
  }
}

TEST(BestResponseGanTest, MatchedDeltaStays) {
  const BestResponseTrace trace =
      RunBestResponseGan(CategoricalDist::Delta(2, 0), CategoricalDist::Delta(2, 0), 10);
  for (const CategoricalDist& g : trace.generators) EXPECT_EQ(DeltaIndex(g), 0u);
  EXPECT_EQ(Values(trace.discriminators.front()), (std::vector<double>{0.5, 0.5}));
}

TEST(BestResponseGanTest, UniformTargetNeverRepeats) {
  const BestResponseTrace trace =
      RunBestResponseGan(CategoricalDist::Uniform(4), CategoricalDist::Delta(4, 0), 4);
  EXPECT_EQ(DeltaIndex(trace.generators[1]), 1u);
  EXPECT_EQ(DeltaIndex(trace.generators[2]), 0u);
  EXPECT_EQ(DeltaIndex(trace.generators[3]), 1u);
  const BestResponseTrace longer =
      RunBestResponseGan(CategoricalDist::Uniform(4), CategoricalDist::Delta(4, 2), 50);
  for (std::size_t k = 1; k < longer.generators.size(); ++k) {
    EXPECT_NE(DeltaIndex(longer.generators[k]), DeltaIndex(longer.generators[k - 1]));
  }
}

TEST(BestResponseGanTest, RejectsShortRuns) {
  EXPECT_THROW(RunBestResponseGan(CategoricalDist::Uniform(2), CategoricalDist::Uniform(2), 1),
               std::invalid_argument);
}

FictitiousGanTrace BernoulliRun(std::int64_t n) {
  const CategoricalDist p_d = CategoricalDist::Bernoulli(0.25);
  const std::vector<double> d0{0.0, 1.0};
  return RunFictitiousGanDiscrete(p_d, CategoricalDist::Bernoulli(0.1),
                                  DiscriminatorTable({0, 1}, d0), n);
}

TEST(FictitiousGanDiscreteTest, RunningMeanIsExact) {
  const FictitiousGanTrace trace = BernoulliRun(500);
  std::vector<double> sum{0.9, 0.1};
  for (std::size_t k = 0; k < trace.records.size(); ++k) {
    const FictitiousGanRecord& r = trace.records[k];
    ASSERT_EQ(r.n, static_cast<std::int64_t>(k + 1));
    for (int i = 0; i < 2; ++i) ASSERT_NEAR(r.pbar[i], sum[i] / r.n, 1e-12);
    for (int i = 0; i < 2; ++i) sum[i] += r.pg[i];
  }
}

// The L1 error shrinks like n^(-1/2): its maximum over each doubling
// window falls, and stays under 3 / sqrt(n).
TEST(FictitiousGanDiscreteTest, BernoulliErrorEnvelopeDecays) {
  const std::int64_t n_max = 102400;
  const FictitiousGanTrace trace = BernoulliRun(n_max);
  double previous = INFINITY;
  for (std::int64_t lo = 800; lo < n_max; lo *= 2) {
    double worst = 0;
    for (std::int64_t n = lo; n < 2 * lo && n <= n_max; ++n) {
      const FictitiousGanRecord& r = trace.records[n - 1];
      worst = std::max(worst, std::abs(r.pbar[0] - 0.75) + std::abs(r.pbar[1] - 0.25));
    }
    EXPECT_LT(worst, previous) << "window at " << lo;
    EXPECT_LE(worst * std::sqrt(static_cast<double>(lo)), 3.0) << "window at " << lo;
    previous = worst;
  }
  for (double d : trace.back().d) EXPECT_NEAR(d, 0.5, 0.01);
}

TEST(FictitiousGanDiscreteTest, DeltaTargetAtEquilibriumStays) {
  const CategoricalDist p = CategoricalDist::Delta(3, 0);
  const FictitiousGanTrace trace =
      RunFictitiousGanDiscrete(p, p, DiscriminatorTable::Constant(p, 0.5), 200);
  for (const FictitiousGanRecord& r : trace.records) {
    ASSERT_EQ(r.pbar, (std::vector<double>{1, 0, 0}));
    ASSERT_EQ(r.d, (std::vector<double>{0.5, 0.5, 0.5}));
  }
}

TEST(FictitiousGanDiscreteTest, SixteenLabelJsd) {
  std::mt19937_64 rng(2026);
  const CategoricalDist p_d = CategoricalDist::RandomSimplex(16, rng);
  const FictitiousGanTrace trace = RunFictitiousGanDiscrete(
      p_d, CategoricalDist::Delta(16, 0), DiscriminatorTable::Constant(p_d, 0.5), 10000);
  EXPECT_LE(trace.back().jsd, 0.01);
}

TEST(FictitiousGanDiscreteTest, ValueIdentityAlongTrace) {
  std::mt19937_64 rng(31);
  const CategoricalDist p_d = CategoricalDist::RandomSimplex(6, rng);
  const FictitiousGanTrace trace = RunFictitiousGanDiscrete(
      p_d, CategoricalDist::Delta(6, 0), DiscriminatorTable::Constant(p_d, 0.5), 3000);
  for (const FictitiousGanRecord& r : trace.records) {
    ASSERT_NEAR(r.value, 2 * r.jsd - kLog4, 1e-9);
  }
}

// The divergence is not monotone step to step. Past the opening transient
// its maximum over successive doubling windows is.
TEST(FictitiousGanDiscreteTest, JsdEnvelopeDecreases) {
  std::mt19937_64 rng(2026);
  const CategoricalDist p_d = CategoricalDist::RandomSimplex(16, rng);
  const FictitiousGanTrace trace = RunFictitiousGanDiscrete(
      p_d, CategoricalDist::Delta(16, 0), DiscriminatorTable::Constant(p_d, 0.5), 16384);
  double previous = INFINITY;
  for (std::int64_t lo = 256; lo < 16384; lo *= 2) {
    double worst = 0;
    for (std::int64_t n = lo; n < 2 * lo; ++n) worst = std::max(worst, trace.records[n - 1].jsd);
    EXPECT_LT(worst, previous + 1e-6) << "window at " << lo;
    previous = worst;
  }
}

TEST(FictitiousGanDiscreteTest, RejectsBadArguments) {
  const CategoricalDist p = CategoricalDist::Uniform(2);
  EXPECT_THROW(RunFictitiousGanDiscrete(p, p, DiscriminatorTable::Constant(p, 0.5), 0),
               std::invalid_argument);
  const CategoricalDist q = CategoricalDist::Uniform(3);
  EXPECT_THROW(RunFictitiousGanDiscrete(p, q, DiscriminatorTable::Constant(p, 0.5), 5),
               std::invalid_argument);
}

TEST(WriteFictitiousGanCsvTest, Header) {
  std::ostringstream out;
  WriteFictitiousGanCsv(out, BernoulliRun(3));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,pbar_g_0,pbar_g_1,D_0,D_1,V,JSD");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

}  // namespace
}  // namespace minimax
