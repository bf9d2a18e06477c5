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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace minimax {
namespace {

void CheckDims(const FiniteZeroSumGame& game, const MixedStrategy& mu1,
               const MixedStrategy& mu2) {
  if (mu1.size() != game.rows() || mu2.size() != game.cols()) {
    throw std::invalid_argument("strategy dimensions do not match payoff " +
                                std::to_string(game.rows()) + "x" +
                                std::to_string(game.cols()));
  }
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("empty mixed strategy");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("mixed strategy weight must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("mixed strategy weights sum to " +
                                std::to_string(sum));
  }
}

MixedStrategy MixedStrategy::Pure(std::size_t num_strategies, std::size_t index) {
  if (index >= num_strategies) throw std::invalid_argument("pure index out of range");
  std::vector<double> probs(num_strategies, 0.0);
  probs[index] = 1.0;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(std::size_t num_strategies) {
  return MixedStrategy(std::vector<double>(
      num_strategies, 1.0 / static_cast<double>(num_strategies)));
}

FiniteZeroSumGame::FiniteZeroSumGame(
    const std::vector<std::vector<double>>& payoff) {
  if (payoff.empty() || payoff.front().empty()) {
    throw std::invalid_argument("payoff matrix must be nonempty");
  }
  rows_ = payoff.size();
  cols_ = payoff.front().size();
  payoff_.reserve(rows_ * cols_);
  for (const auto& row : payoff) {
    if (row.size() != cols_) throw std::invalid_argument("ragged payoff matrix");
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite payoff");
      payoff_.push_back(v);
    }
  }
}

double FiniteZeroSumGame::PayoffSpread() const {
  auto [lo, hi] = std::minmax_element(payoff_.begin(), payoff_.end());
  return *hi - *lo;
}

BilinearIntervalGame::BilinearIntervalGame(double x_lo, double x_hi, double y_lo,
                                           double y_hi)
    : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
  if (!(x_lo < x_hi) || !(y_lo < y_hi) || !std::isfinite(x_lo) ||
      !std::isfinite(x_hi) || !std::isfinite(y_lo) || !std::isfinite(y_hi)) {
    throw std::invalid_argument("bilinear game needs finite lo < hi bounds");
  }
}

double ExpectedUtility(const FiniteZeroSumGame& game, const MixedStrategy& mu1,
                       const MixedStrategy& mu2) {
  CheckDims(game, mu1, mu2);
  double total = 0.0;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < game.cols(); ++j) row += game.payoff(i, j) * mu2[j];
    total += mu1[i] * row;
  }
  return total;
}

std::vector<double> RowValues(const FiniteZeroSumGame& game,
                              const MixedStrategy& mu2) {
  if (mu2.size() != game.cols()) {
    throw std::invalid_argument("column strategy dimension mismatch");
  }
  std::vector<double> values(game.rows(), 0.0);
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      values[i] += game.payoff(i, j) * mu2[j];
    }
  }
  return values;
}

std::vector<double> ColumnValues(const FiniteZeroSumGame& game,
                                 const MixedStrategy& mu1) {
  if (mu1.size() != game.rows()) {
    throw std::invalid_argument("row strategy dimension mismatch");
  }
  std::vector<double> values(game.cols(), 0.0);
  for (std::size_t j = 0; j < game.cols(); ++j) {
    for (std::size_t i = 0; i < game.rows(); ++i) {
      values[j] += game.payoff(i, j) * mu1[i];
    }
  }
  return values;
}

std::size_t BestResponsePure(const FiniteZeroSumGame& game, Player player,
                             const MixedStrategy& opponent_mix) {
  if (player == Player::kOne) {
    const std::vector<double> values = RowValues(game, opponent_mix);
    // max_element returns the first maximum.
    return static_cast<std::size_t>(
        std::max_element(values.begin(), values.end()) - values.begin());
  }
  const std::vector<double> values = ColumnValues(game, opponent_mix);
  return static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
}

double BilinearBestResponse(const BilinearIntervalGame& game, Player player,
                            double opponent_mean) {
  if (player == Player::kOne) {
    if (opponent_mean > 0.0) return game.x_hi();
    if (opponent_mean < 0.0) return game.x_lo();
    return std::clamp(0.0, game.x_lo(), game.x_hi());
  }
  if (opponent_mean > 0.0) return game.y_lo();
  if (opponent_mean < 0.0) return game.y_hi();
  return std::clamp(0.0, game.y_lo(), game.y_hi());
}

NashCheck EpsilonNashCheck(const FiniteZeroSumGame& game,
                           const MixedStrategy& mu1, const MixedStrategy& mu2,
                           double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  const ValueBounds bounds = GameValueBounds(game, mu1, mu2);
  const double value = ExpectedUtility(game, mu1, mu2);
  // Player 1 gains by moving up to the best row, player 2 by moving down
  // to the best column.
  const double gain = std::max({0.0, bounds.upper - value, value - bounds.lower});
  return NashCheck{gain <= eps, gain};
}

ValueBounds GameValueBounds(const FiniteZeroSumGame& game,
                            const MixedStrategy& mu1, const MixedStrategy& mu2) {
  CheckDims(game, mu1, mu2);
  const std::vector<double> cols = ColumnValues(game, mu1);
  const std::vector<double> rows = RowValues(game, mu2);
  return ValueBounds{*std::min_element(cols.begin(), cols.end()),
                     *std::max_element(rows.begin(), rows.end())};
}

AnyGame GameFromJson(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("game JSON: ") + e.what());
  }
  try {
    if (doc.contains("payoff")) {
      return FiniteZeroSumGame(doc.at("payoff").get<std::vector<std::vector<double>>>());
    }
    if (doc.contains("bilinear")) {
      const auto& b = doc.at("bilinear");
      const auto x = b.at("x").get<std::vector<double>>();
      const auto y = b.at("y").get<std::vector<double>>();
      if (x.size() != 2 || y.size() != 2) {
        throw std::invalid_argument("bilinear bounds must be [lo, hi] pairs");
      }
      return BilinearIntervalGame(x[0], x[1], y[0], y[1]);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("game JSON: ") + e.what());
  }
  throw std::invalid_argument("game JSON needs a \"payoff\" or \"bilinear\" key");
}

}  // namespace minimax
