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

#include "minimax/gradient_dynamics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/ostream.h>

namespace minimax {

GdaState GdaStep(const GdaState& state) {
  return GdaState{state.x + state.step * state.y, state.y - state.step * state.x,
                  state.step, state.n + 1};
}

GdaState GdaStepClipped(const GdaState& state, const BilinearIntervalGame& box) {
  GdaState next = GdaStep(state);
  next.x = std::clamp(next.x, box.x_lo(), box.x_hi());
  next.y = std::clamp(next.y, box.y_lo(), box.y_hi());
  return next;
}

Point2 ClosedFormTrajectory(double x0, double y0, double step, std::int64_t n) {
  if (x0 == 0.0 && y0 == 0.0) {
    throw std::invalid_argument("closed form needs a nonzero initial point");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("step must be positive and finite");
  }
  const double radius = std::hypot(x0, y0);
  const double theta = std::atan(step);
  const double beta = -std::atan2(x0, y0);
  // c^n computed as exp(n/2 * log1p(step^2)) to keep precision for tiny steps.
  const double growth =
      std::exp(0.5 * static_cast<double>(n) * std::log1p(step * step));
  const double phase = beta - static_cast<double>(n) * theta;
  return Point2{-radius * growth * std::sin(phase), radius * growth * std::cos(phase)};
}

GdaTrace RunGda(double x0, double y0, double step, std::int64_t n_iters,
                const std::optional<BilinearIntervalGame>& clip_box) {
  if (n_iters < 1) throw std::invalid_argument("n_iters must be >= 1");
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("step must be positive and finite");
  }
  GdaTrace trace;
  trace.records.reserve(static_cast<std::size_t>(n_iters) + 1);
  GdaState state{x0, y0, step, 0};
  const double norm0 = std::hypot(x0, y0);
  while (true) {
    const double norm = std::hypot(state.x, state.y);
    trace.records.push_back({state.n, state.x, state.y, state.x * state.y, norm});
    if (!trace.diverged && norm > kDivergenceFactor * norm0) {
      trace.diverged = true;
      trace.divergence_iter = state.n;
    }
    if (state.n >= n_iters) break;
    state = clip_box ? GdaStepClipped(state, *clip_box) : GdaStep(state);
  }
  return trace;
}

std::int64_t PredictedDivergenceIter(double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  const double exact = 2.0 * std::log(kDivergenceFactor) / std::log1p(step * step);
  auto n = static_cast<std::int64_t>(std::floor(exact)) + 1;
  return n;
}

void WriteGdaCsv(std::ostream& out, const GdaTrace& trace) {
  out << "n,x,y,xy,norm\n";
  for (const GdaRecord& r : trace.records) {
    fmt::print(out, "{},{},{},{},{}\n", r.n, r.x, r.y, r.xy, r.norm);
  }
}

}  // namespace minimax
