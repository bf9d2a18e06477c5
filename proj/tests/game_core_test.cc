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

#include "minimax/game_core.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace minimax {
namespace {

const FiniteZeroSumGame kMatchingPennies({{1, -1}, {-1, 1}});

MixedStrategy RandomStrategy(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& v : w) sum += (v = e(rng));
  for (double& v : w) v /= sum;
  return MixedStrategy(w);
}

FiniteZeroSumGame RandomGame(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<std::vector<double>> payoff(rows, std::vector<double>(cols));
  for (auto& row : payoff) {
    for (double& v : row) v = u(rng);
  }
  return FiniteZeroSumGame(payoff);
}

TEST(MixedStrategyTest, RejectsInvalidWeights) {
  EXPECT_THROW(MixedStrategy({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(MixedStrategy({1.5, -0.5}), std::invalid_argument);
  EXPECT_THROW(MixedStrategy({}), std::invalid_argument);
  EXPECT_THROW(MixedStrategy({NAN, 1.0}), std::invalid_argument);
  EXPECT_NO_THROW(MixedStrategy({0.25, 0.75}));
}

TEST(FiniteGameTest, RejectsRaggedAndNonFinite) {
  EXPECT_THROW(FiniteZeroSumGame({{1, 2}, {3}}), std::invalid_argument);
  EXPECT_THROW(FiniteZeroSumGame({{1, INFINITY}}), std::invalid_argument);
  EXPECT_THROW(FiniteZeroSumGame({}), std::invalid_argument);
}

TEST(BilinearGameTest, RejectsEmptyIntervals) {
  EXPECT_THROW(BilinearIntervalGame(1, 1, -1, 1), std::invalid_argument);
  EXPECT_THROW(BilinearIntervalGame(-1, 1, 2, 1), std::invalid_argument);
}

TEST(ExpectedUtilityTest, Examples) {
  EXPECT_DOUBLE_EQ(ExpectedUtility(kMatchingPennies, MixedStrategy::Uniform(2),
                                   MixedStrategy::Uniform(2)),
                   0.0);
  EXPECT_DOUBLE_EQ(ExpectedUtility(kMatchingPennies, MixedStrategy::Pure(2, 0),
                                   MixedStrategy::Pure(2, 0)),
                   1.0);
  // 2*(1/2)(1/4) + 2*(1/2)(3/4) = 1.
  const FiniteZeroSumGame diag({{2, 0}, {0, 2}});
  EXPECT_DOUBLE_EQ(
      ExpectedUtility(diag, MixedStrategy({0.5, 0.5}), MixedStrategy({0.25, 0.75})), 1.0);
}

TEST(ExpectedUtilityTest, DimensionMismatch) {
  EXPECT_THROW(ExpectedUtility(kMatchingPennies, MixedStrategy::Uniform(3),
                               MixedStrategy::Uniform(2)),
               std::invalid_argument);
}

TEST(ExpectedUtilityTest, BilinearInEachArgument) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteZeroSumGame game = RandomGame(3, 4, rng);
    const MixedStrategy a = RandomStrategy(3, rng);
    const MixedStrategy b = RandomStrategy(3, rng);
    const MixedStrategy mu2 = RandomStrategy(4, rng);
    const double alpha = unit(rng);
    std::vector<double> mix(3);
    for (std::size_t i = 0; i < 3; ++i) mix[i] = alpha * a[i] + (1 - alpha) * b[i];
    double s = 0;
    for (double v : mix) s += v;
    for (double& v : mix) v /= s;
    const double lhs = ExpectedUtility(game, MixedStrategy(mix), mu2);
    const double rhs = alpha * ExpectedUtility(game, a, mu2) +
                       (1 - alpha) * ExpectedUtility(game, b, mu2);
    EXPECT_NEAR(lhs, rhs, 1e-12);
  }
}

TEST(BestResponsePureTest, Examples) {
  EXPECT_EQ(BestResponsePure(kMatchingPennies, Player::kOne, MixedStrategy::Pure(2, 0)), 0u);
  EXPECT_EQ(BestResponsePure(kMatchingPennies, Player::kOne, MixedStrategy::Uniform(2)), 0u);
  // Columns are worth 1 and 2 to player 1; the minimizer takes column 0.
  const FiniteZeroSumGame game({{0, 3}, {2, 1}});
  EXPECT_EQ(BestResponsePure(game, Player::kTwo, MixedStrategy::Uniform(2)), 0u);
}

TEST(BestResponsePureTest, BeatsEveryPureAlternative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteZeroSumGame game = RandomGame(4, 3, rng);
    const MixedStrategy mu2 = RandomStrategy(3, rng);
    const MixedStrategy mu1 = RandomStrategy(4, rng);
    const std::size_t r = BestResponsePure(game, Player::kOne, mu2);
    const std::size_t c = BestResponsePure(game, Player::kTwo, mu1);
    const double best_row = ExpectedUtility(game, MixedStrategy::Pure(4, r), mu2);
    const double best_col = ExpectedUtility(game, mu1, MixedStrategy::Pure(3, c));
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_GE(best_row, ExpectedUtility(game, MixedStrategy::Pure(4, i), mu2));
    }
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_LE(best_col, ExpectedUtility(game, mu1, MixedStrategy::Pure(3, j)));
    }
  }
}

TEST(BilinearBestResponseTest, SignRule) {
  const BilinearIntervalGame game(-10, 10, -10, 10);
  EXPECT_EQ(BilinearBestResponse(game, Player::kOne, 0.3), 10.0);
  EXPECT_EQ(BilinearBestResponse(game, Player::kTwo, 0.3), -10.0);
  EXPECT_EQ(BilinearBestResponse(game, Player::kOne, -4.0), -10.0);
  EXPECT_EQ(BilinearBestResponse(game, Player::kTwo, -4.0), 10.0);
  EXPECT_EQ(BilinearBestResponse(game, Player::kOne, 0.0), 0.0);
  EXPECT_EQ(BilinearBestResponse(game, Player::kTwo, 0.0), 0.0);
}

TEST(BilinearBestResponseTest, ZeroTieClampedIntoInterval) {
  const BilinearIntervalGame game(1, 2, 3, 4);
  EXPECT_EQ(BilinearBestResponse(game, Player::kOne, 0.0), 1.0);
  EXPECT_EQ(BilinearBestResponse(game, Player::kTwo, 0.0), 3.0);
}

TEST(EpsilonNashTest, Examples) {
  const NashCheck uniform = EpsilonNashCheck(kMatchingPennies, MixedStrategy::Uniform(2),
                                             MixedStrategy::Uniform(2), 1e-9);
  EXPECT_TRUE(uniform.is_equilibrium);
  EXPECT_DOUBLE_EQ(uniform.max_gain, 0.0);

  const NashCheck pure = EpsilonNashCheck(kMatchingPennies, MixedStrategy::Pure(2, 0),
                                          MixedStrategy::Pure(2, 0), 0.5);
  EXPECT_FALSE(pure.is_equilibrium);
  EXPECT_DOUBLE_EQ(pure.max_gain, 2.0);
}

TEST(EpsilonNashTest, VacuousAtPayoffSpread) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteZeroSumGame game = RandomGame(3, 3, rng);
    EXPECT_TRUE(EpsilonNashCheck(game, RandomStrategy(3, rng), RandomStrategy(3, rng),
                                 game.PayoffSpread())
                    .is_equilibrium);
  }
}

TEST(EpsilonNashTest, NegativeEpsRejected) {
  EXPECT_THROW(EpsilonNashCheck(kMatchingPennies, MixedStrategy::Uniform(2),
                                MixedStrategy::Uniform(2), -1.0),
               std::invalid_argument);
}

// Brute force over every pure deviation of both players.
double BruteForceGain(const FiniteZeroSumGame& g, const MixedStrategy& mu1,
                      const MixedStrategy& mu2) {
  const double v = ExpectedUtility(g, mu1, mu2);
  double gain = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    gain = std::max(gain, ExpectedUtility(g, MixedStrategy::Pure(g.rows(), i), mu2) - v);
  }
  for (std::size_t j = 0; j < g.cols(); ++j) {
    gain = std::max(gain, v - ExpectedUtility(g, mu1, MixedStrategy::Pure(g.cols(), j)));
  }
  return gain;
}

TEST(EpsilonNashTest, GainMatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteZeroSumGame game = RandomGame(3, 4, rng);
    const MixedStrategy mu1 = RandomStrategy(3, rng);
    const MixedStrategy mu2 = RandomStrategy(4, rng);
    EXPECT_NEAR(EpsilonNashCheck(game, mu1, mu2, 0.0).max_gain,
                BruteForceGain(game, mu1, mu2), 1e-12);
  }
}

TEST(GameValueBoundsTest, Examples) {
  ValueBounds b = GameValueBounds(kMatchingPennies, MixedStrategy::Uniform(2),
                                  MixedStrategy::Uniform(2));
  EXPECT_DOUBLE_EQ(b.lower, 0.0);
  EXPECT_DOUBLE_EQ(b.upper, 0.0);
  b = GameValueBounds(kMatchingPennies, MixedStrategy::Pure(2, 0), MixedStrategy::Uniform(2));
  EXPECT_DOUBLE_EQ(b.lower, -1.0);
  EXPECT_DOUBLE_EQ(b.upper, 0.0);
  const FiniteZeroSumGame diag({{2, 0}, {0, 2}});
  b = GameValueBounds(diag, MixedStrategy::Uniform(2), MixedStrategy::Uniform(2));
  EXPECT_DOUBLE_EQ(b.lower, 1.0);
  EXPECT_DOUBLE_EQ(b.upper, 1.0);
}

TEST(GameValueBoundsTest, OrderedAndCertifiedByEpsilonNash) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteZeroSumGame game = RandomGame(3, 3, rng);
    const MixedStrategy mu1 = RandomStrategy(3, rng);
    const MixedStrategy mu2 = RandomStrategy(3, rng);
    const ValueBounds b = GameValueBounds(game, mu1, mu2);
    EXPECT_LE(b.lower, b.upper);
    const NashCheck check = EpsilonNashCheck(game, mu1, mu2, 0.0);
    const double eps = check.max_gain;
    const double u = ExpectedUtility(game, mu1, mu2);
    // Passing at eps puts u within eps of both ends of the bracket.
    ASSERT_TRUE(EpsilonNashCheck(game, mu1, mu2, eps).is_equilibrium);
    EXPECT_LE(b.upper - u, eps + 1e-12);
    EXPECT_LE(u - b.lower, eps + 1e-12);
  }
}

TEST(GameFromJsonTest, ParsesBothKinds) {
  const AnyGame finite = GameFromJson(R"({"payoff": [[1, -1], [-1, 1]]})");
  ASSERT_TRUE(std::holds_alternative<FiniteZeroSumGame>(finite));
  EXPECT_EQ(std::get<FiniteZeroSumGame>(finite).payoff(1, 0), -1.0);

  const AnyGame bilinear = GameFromJson(R"({"bilinear": {"x": [-10, 10], "y": [-10, 10]}})");
  ASSERT_TRUE(std::holds_alternative<BilinearIntervalGame>(bilinear));
  EXPECT_EQ(std::get<BilinearIntervalGame>(bilinear).y_hi(), 10.0);
}

TEST(GameFromJsonTest, RejectsMalformed) {
  EXPECT_THROW(GameFromJson("{"), std::invalid_argument);
  EXPECT_THROW(GameFromJson(R"({"other": 1})"), std::invalid_argument);
  EXPECT_THROW(GameFromJson(R"({"bilinear": {"x": [1], "y": [0, 1]}})"), std::invalid_argument);
  EXPECT_THROW(GameFromJson(R"({"payoff": [[1, 2], [3]]})"), std::invalid_argument);
}

}  // namespace
}  // namespace minimax
