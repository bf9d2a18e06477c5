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

#ifndef MINIMAX_FICTITIOUS_PLAY_H_
#define MINIMAX_FICTITIOUS_PLAY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "minimax/game_core.h"

namespace minimax {

struct FiniteActions {
  std::size_t p1 = 0;
  std::size_t p2 = 0;
};

struct BilinearActions {
  double x = 0.1;
  double y = 0.1;
};

// Fictitious play over a finite game. Empirical strategies are kept as
// integer counts so every weight is exactly count / n.
class FiniteFpState {
 public:
  FiniteFpState(std::size_t rows, std::size_t cols);

  std::int64_t n() const { return n_; }
  const std::vector<std::size_t>& history(Player p) const {
    return p == Player::kOne ? history1_ : history2_;
  }
  const std::vector<std::int64_t>& counts(Player p) const {
    return p == Player::kOne ? counts1_ : counts2_;
  }
  // Sum of realized u(s1^k, s2^k) over the history.
  double utility_sum() const { return utility_sum_; }

  // counts / n. Throws InvalidStateError at n = 0.
  MixedStrategy Empirical(Player p) const;

 private:
  friend FiniteFpState FpStep(const FiniteFpState&, const FiniteZeroSumGame&,
                              const std::optional<FiniteActions>&);
  void Append(const FiniteZeroSumGame& game, FiniteActions actions);

  std::int64_t n_ = 0;
  std::vector<std::size_t> history1_, history2_;
  std::vector<std::int64_t> counts1_, counts2_;
  double utility_sum_ = 0.0;
};

// Fictitious play over the bilinear interval game. Actions are real.
class BilinearFpState {
 public:
  BilinearFpState() = default;

  std::int64_t n() const { return n_; }
  const std::vector<double>& history(Player p) const {
    return p == Player::kOne ? history1_ : history2_;
  }
  double action_sum(Player p) const { return p == Player::kOne ? sum1_ : sum2_; }
  double mean_action(Player p) const;
  double utility_sum() const { return utility_sum_; }

  // Share of the history spent at the lower / upper interval endpoint.
  double FrequencyAtLow(Player p) const;
  double FrequencyAtHigh(Player p) const;

 private:
  friend BilinearFpState FpStep(const BilinearFpState&,
                                const BilinearIntervalGame&,
                                const std::optional<BilinearActions>&);
  void Append(const BilinearIntervalGame& game, BilinearActions actions);

  std::int64_t n_ = 0;
  std::vector<double> history1_, history2_;
  double sum1_ = 0.0, sum2_ = 0.0;
  std::array<std::int64_t, 2> at_low_{0, 0};
  std::array<std::int64_t, 2> at_high_{0, 0};
  double utility_sum_ = 0.0;
};

// One round of simultaneous fictitious play: each player appends a pure
// best response to the opponent's empirical history. At n = 0 the caller
// must supply the initial actions instead (InvalidStateError otherwise);
// supplying them at n > 0 is an std::invalid_argument.
FiniteFpState FpStep(const FiniteFpState& state, const FiniteZeroSumGame& game,
                     const std::optional<FiniteActions>& init = std::nullopt);
BilinearFpState FpStep(const BilinearFpState& state,
                       const BilinearIntervalGame& game,
                       const std::optional<BilinearActions>& init = std::nullopt);

struct FpRecord {
  std::int64_t n = 0;
  // Finite game: empirical strategy. Bilinear game: {freq at lo, freq at hi}.
  std::vector<double> emp1;
  std::vector<double> emp2;
  // Player 1's expected utility at the empirical profile.
  double avg_utility = 0.0;
  // (1/n) sum_k u(s1^k, s2^k) along the realized action path.
  double realized_avg_utility = 0.0;
  ValueBounds bounds;
};

struct FpTrace {
  std::vector<FpRecord> records;
  std::vector<std::size_t> final_history1, final_history2;  // finite only
  std::vector<double> final_actions1, final_actions2;       // bilinear only
};

// Runs until the history holds n_iters actions per player (the initial
// actions count as the first). One record per history length.
FpTrace RunFp(const FiniteZeroSumGame& game, std::int64_t n_iters,
              FiniteActions init = {});
FpTrace RunFp(const BilinearIntervalGame& game, std::int64_t n_iters,
              BilinearActions init = {});

// Exact bracket on the bilinear game value at the empirical means: the
// utility is linear in each action so endpoint responses suffice.
ValueBounds BilinearValueBounds(const BilinearIntervalGame& game, double mean_x,
                                double mean_y);

// n, emp_p1_*, emp_p2_*, avg_utility, bound_lo, bound_hi, realized_utility
void WriteFpCsv(std::ostream& out, const FpTrace& trace, bool bilinear);

}  // namespace minimax

#endif  // MINIMAX_FICTITIOUS_PLAY_H_
