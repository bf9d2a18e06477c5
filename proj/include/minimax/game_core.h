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

#ifndef MINIMAX_GAME_CORE_H_
#define MINIMAX_GAME_CORE_H_

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace minimax {

// Player 1 maximizes the stored payoff, player 2 minimizes it.
enum class Player { kOne, kTwo };

// Probability vector over a finite set of pure strategies.
class MixedStrategy {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws std::invalid_argument unless every weight is finite and
  // nonnegative and the weights sum to 1 within kSumTolerance.
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy Pure(std::size_t num_strategies, std::size_t index);
  static MixedStrategy Uniform(std::size_t num_strategies);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Two-player zero-sum game with finitely many pure strategies. Only player
// 1's utility is stored; player 2 receives its negation.
class FiniteZeroSumGame {
 public:
  // Rows index player 1's strategies, columns player 2's. Throws
  // std::invalid_argument on empty, ragged or non-finite input.
  explicit FiniteZeroSumGame(const std::vector<std::vector<double>>& payoff);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double payoff(std::size_t row, std::size_t col) const {
    return payoff_[row * cols_ + col];
  }

  // Largest minus smallest payoff entry.
  double PayoffSpread() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> payoff_;
};

// u(x, y) = x * y for player 1 over [x_lo, x_hi] x [y_lo, y_hi].
class BilinearIntervalGame {
 public:
  BilinearIntervalGame(double x_lo, double x_hi, double y_lo, double y_hi);

  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  double y_lo() const { return y_lo_; }
  double y_hi() const { return y_hi_; }

  double Utility(double x, double y) const { return x * y; }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
};

using AnyGame = std::variant<FiniteZeroSumGame, BilinearIntervalGame>;

// Player 1's expected payoff under independent mixing.
double ExpectedUtility(const FiniteZeroSumGame& game, const MixedStrategy& mu1,
                       const MixedStrategy& mu2);

// Player 1's expected payoff of each pure row against mu2.
std::vector<double> RowValues(const FiniteZeroSumGame& game,
                              const MixedStrategy& mu2);
// Player 1's expected payoff of each pure column against mu1.
std::vector<double> ColumnValues(const FiniteZeroSumGame& game,
                                 const MixedStrategy& mu1);

// Pure best response; ties go to the lowest index.
std::size_t BestResponsePure(const FiniteZeroSumGame& game, Player player,
                             const MixedStrategy& opponent_mix);

// Best response in the bilinear game against the opponent's mean action.
// A zero mean leaves every action payoff-equivalent; 0 (clamped into the
// interval) is returned in that case.
double BilinearBestResponse(const BilinearIntervalGame& game, Player player,
                            double opponent_mean);

struct NashCheck {
  bool is_equilibrium = false;
  // Largest utility improvement any player gets from a pure deviation.
  double max_gain = 0.0;
};

NashCheck EpsilonNashCheck(const FiniteZeroSumGame& game,
                           const MixedStrategy& mu1, const MixedStrategy& mu2,
                           double eps);

struct ValueBounds {
  double lower = 0.0;
  double upper = 0.0;
  double gap() const { return upper - lower; }
};

// lower: what mu1 guarantees against every pure column.
// upper: what mu2 concedes against every pure row.
// The game value always lies in [lower, upper].
ValueBounds GameValueBounds(const FiniteZeroSumGame& game,
                            const MixedStrategy& mu1, const MixedStrategy& mu2);

// Parses {"payoff": [[...], ...]} or {"bilinear": {"x": [lo, hi], "y": [lo, hi]}}.
AnyGame GameFromJson(const std::string& text);

}  // namespace minimax

#endif  // MINIMAX_GAME_CORE_H_
