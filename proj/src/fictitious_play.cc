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

#include "minimax/fictitious_play.h"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "minimax/errors.h"

namespace minimax {
namespace {

std::size_t Index(Player p) { return p == Player::kOne ? 0 : 1; }

}  // namespace

FiniteFpState::FiniteFpState(std::size_t rows, std::size_t cols)
    : counts1_(rows, 0), counts2_(cols, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty strategy set");
}

MixedStrategy FiniteFpState::Empirical(Player p) const {
  if (n_ == 0) throw InvalidStateError("no actions recorded yet");
  const auto& c = counts(p);
  std::vector<double> probs(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    probs[i] = static_cast<double>(c[i]) / static_cast<double>(n_);
  }
  return MixedStrategy(std::move(probs));
}

void FiniteFpState::Append(const FiniteZeroSumGame& game, FiniteActions actions) {
  if (actions.p1 >= counts1_.size() || actions.p2 >= counts2_.size()) {
    throw std::invalid_argument("action index out of range");
  }
  history1_.push_back(actions.p1);
  history2_.push_back(actions.p2);
  ++counts1_[actions.p1];
  ++counts2_[actions.p2];
  utility_sum_ += game.payoff(actions.p1, actions.p2);
  ++n_;
}

FiniteFpState FpStep(const FiniteFpState& state, const FiniteZeroSumGame& game,
                     const std::optional<FiniteActions>& init) {
  if (state.counts1_.size() != game.rows() || state.counts2_.size() != game.cols()) {
    throw std::invalid_argument("state does not match game dimensions");
  }
  FiniteFpState next = state;
  if (state.n() == 0) {
    if (!init) throw InvalidStateError("fictitious play at n = 0 needs initial actions");
    next.Append(game, *init);
    return next;
  }
  if (init) throw std::invalid_argument("initial actions given at n > 0");
  // Both respond to the history before this round.
  const std::size_t a1 =
      BestResponsePure(game, Player::kOne, state.Empirical(Player::kTwo));
  const std::size_t a2 =
      BestResponsePure(game, Player::kTwo, state.Empirical(Player::kOne));
  next.Append(game, {a1, a2});
  return next;
}

double BilinearFpState::mean_action(Player p) const {
  if (n_ == 0) throw InvalidStateError("no actions recorded yet");
  return action_sum(p) / static_cast<double>(n_);
}

double BilinearFpState::FrequencyAtLow(Player p) const {
  if (n_ == 0) throw InvalidStateError("no actions recorded yet");
  return static_cast<double>(at_low_[Index(p)]) / static_cast<double>(n_);
}

double BilinearFpState::FrequencyAtHigh(Player p) const {
  if (n_ == 0) throw InvalidStateError("no actions recorded yet");
  return static_cast<double>(at_high_[Index(p)]) / static_cast<double>(n_);
}

void BilinearFpState::Append(const BilinearIntervalGame& game,
                             BilinearActions actions) {
  history1_.push_back(actions.x);
  history2_.push_back(actions.y);
  sum1_ += actions.x;
  sum2_ += actions.y;
  at_low_[0] += actions.x == game.x_lo();
  at_high_[0] += actions.x == game.x_hi();
  at_low_[1] += actions.y == game.y_lo();
  at_high_[1] += actions.y == game.y_hi();
  utility_sum_ += game.Utility(actions.x, actions.y);
  ++n_;
}

BilinearFpState FpStep(const BilinearFpState& state,
                       const BilinearIntervalGame& game,
                       const std::optional<BilinearActions>& init) {
  BilinearFpState next = state;
  if (state.n() == 0) {
    if (!init) throw InvalidStateError("fictitious play at n = 0 needs initial actions");
    next.Append(game, *init);
    return next;
  }
  if (init) throw std::invalid_argument("initial actions given at n > 0");
  // The sign of the sum decides the response; the mean has the same sign.
  const double x = BilinearBestResponse(game, Player::kOne, state.action_sum(Player::kTwo));
  const double y = BilinearBestResponse(game, Player::kTwo, state.action_sum(Player::kOne));
  next.Append(game, {x, y});
  return next;
}

ValueBounds BilinearValueBounds(const BilinearIntervalGame& game, double mean_x,
                                double mean_y) {
  const double lower = std::min(mean_x * game.y_lo(), mean_x * game.y_hi());
  const double upper = std::max(game.x_lo() * mean_y, game.x_hi() * mean_y);
  return ValueBounds{lower, upper};
}

FpTrace RunFp(const FiniteZeroSumGame& game, std::int64_t n_iters,
              FiniteActions init) {
  if (n_iters < 1) throw std::invalid_argument("n_iters must be >= 1");
  FpTrace trace;
  trace.records.reserve(static_cast<std::size_t>(n_iters));
  FiniteFpState state = FpStep(FiniteFpState(game.rows(), game.cols()), game, init);
  while (true) {
    const MixedStrategy mu1 = state.Empirical(Player::kOne);
    const MixedStrategy mu2 = state.Empirical(Player::kTwo);
    FpRecord rec;
    rec.n = state.n();
    rec.emp1.assign(mu1.probs().begin(), mu1.probs().end());
    rec.emp2.assign(mu2.probs().begin(), mu2.probs().end());
    rec.avg_utility = ExpectedUtility(game, mu1, mu2);
    rec.realized_avg_utility = state.utility_sum() / static_cast<double>(state.n());
    rec.bounds = GameValueBounds(game, mu1, mu2);
    trace.records.push_back(std::move(rec));
    if (state.n() >= n_iters) break;
    state = FpStep(state, game);
  }
  trace.final_history1 = state.history(Player::kOne);
  trace.final_history2 = state.history(Player::kTwo);
  return trace;
}

FpTrace RunFp(const BilinearIntervalGame& game, std::int64_t n_iters,
              BilinearActions init) {
  if (n_iters < 1) throw std::invalid_argument("n_iters must be >= 1");
  FpTrace trace;
  trace.records.reserve(static_cast<std::size_t>(n_iters));
  BilinearFpState state = FpStep(BilinearFpState(), game, init);
  while (true) {
    const double mean_x = state.mean_action(Player::kOne);
    const double mean_y = state.mean_action(Player::kTwo);
    FpRecord rec;
    rec.n = state.n();
    rec.emp1 = {state.FrequencyAtLow(Player::kOne), state.FrequencyAtHigh(Player::kOne)};
    rec.emp2 = {state.FrequencyAtLow(Player::kTwo), state.FrequencyAtHigh(Player::kTwo)};
    rec.avg_utility = game.Utility(mean_x, mean_y);
    rec.realized_avg_utility = state.utility_sum() / static_cast<double>(state.n());
    rec.bounds = BilinearValueBounds(game, mean_x, mean_y);
    trace.records.push_back(std::move(rec));
    if (state.n() >= n_iters) break;
    state = FpStep(state, game);
  }
  trace.final_actions1 = state.history(Player::kOne);
  trace.final_actions2 = state.history(Player::kTwo);
  return trace;
}

void WriteFpCsv(std::ostream& out, const FpTrace& trace, bool bilinear) {
  const std::size_t k1 = trace.records.empty() ? 0 : trace.records.front().emp1.size();
  const std::size_t k2 = trace.records.empty() ? 0 : trace.records.front().emp2.size();
  out << "n";
  for (std::size_t i = 0; i < k1; ++i) {
    out << (bilinear ? (i == 0 ? ",emp_p1_lo" : ",emp_p1_hi") : fmt::format(",emp_p1_{}", i));
  }
  for (std::size_t i = 0; i < k2; ++i) {
    out << (bilinear ? (i == 0 ? ",emp_p2_lo" : ",emp_p2_hi") : fmt::format(",emp_p2_{}", i));
  }
  out << ",avg_utility,bound_lo,bound_hi,realized_utility\n";
  for (const FpRecord& r : trace.records) {
    out << r.n;
    for (double p : r.emp1) fmt::print(out, ",{}", p);
    for (double p : r.emp2) fmt::print(out, ",{}", p);
    fmt::print(out, ",{},{},{},{}\n", r.avg_utility, r.bounds.lower, r.bounds.upper,
               r.realized_avg_utility);
  }
}

}  // namespace minimax
