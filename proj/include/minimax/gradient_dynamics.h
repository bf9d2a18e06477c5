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

#ifndef MINIMAX_GRADIENT_DYNAMICS_H_
#define MINIMAX_GRADIENT_DYNAMICS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "minimax/game_core.h"

namespace minimax {

// Simultaneous gradient descent-ascent on u(x, y) = x * y: x ascends,
// y descends, both with step `step`.
struct GdaState {
  double x = 0.0;
  double y = 0.0;
  double step = 0.01;
  std::int64_t n = 0;
};

// x' = x + step * y, y' = y - step * x. No projection onto any box.
GdaState GdaStep(const GdaState& state);

// Same update followed by projection onto the game's box. Only for
// rendering bounded trajectories; the closed form does not describe it.
GdaState GdaStepClipped(const GdaState& state, const BilinearIntervalGame& box);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// n-th iterate of GdaStep in closed form. The update is sqrt(1 + step^2)
// times a clockwise rotation by atan(step):
//   (x_n, y_n) = r c^n (-sin(beta - n theta), cos(beta - n theta))
// with r = |z_0|, c = sqrt(1 + step^2), theta = atan(step) and
// beta = -atan2(x0, y0). Throws std::invalid_argument at the origin.
Point2 ClosedFormTrajectory(double x0, double y0, double step, std::int64_t n);

struct GdaRecord {
  std::int64_t n = 0;
  double x = 0.0;
  double y = 0.0;
  double xy = 0.0;
  double norm = 0.0;
};

struct GdaTrace {
  std::vector<GdaRecord> records;  // n = 0 .. n_iters
  bool diverged = false;
  // First n at which the norm exceeded kDivergenceFactor times the initial
  // norm.
  std::optional<std::int64_t> divergence_iter;
};

inline constexpr double kDivergenceFactor = 10.0;

GdaTrace RunGda(double x0, double y0, double step, std::int64_t n_iters,
                const std::optional<BilinearIntervalGame>& clip_box = std::nullopt);

// Smallest n with (1 + step^2)^(n/2) > kDivergenceFactor.
std::int64_t PredictedDivergenceIter(double step);

// n, x, y, xy, norm
void WriteGdaCsv(std::ostream& out, const GdaTrace& trace);

}  // namespace minimax

#endif  // MINIMAX_GRADIENT_DYNAMICS_H_
