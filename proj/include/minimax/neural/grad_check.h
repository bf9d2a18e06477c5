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

#ifndef MINIMAX_NEURAL_GRAD_CHECK_H_
#define MINIMAX_NEURAL_GRAD_CHECK_H_

#include <cstdint>
#include <functional>

#include "minimax/neural/fictitious_gan.h"
#include "minimax/neural/mlp.h"

namespace minimax::neural {

// |a - b| / max(|a|, |b|, kGradErrorFloor). The floor makes coordinates with
// a numerically zero gradient compare absolutely.
inline constexpr double kGradErrorFloor = 1e-4;
double GradRelativeError(double analytic, double numeric);

struct GradCheckResult {
  int probes = 0;
  double max_rel_error = 0.0;
};

using LossOf = std::function<LossTape(const ParamVector&)>;

// Reverse-mode gradient against central differences with step h on `probes`
// coordinates drawn uniformly with replacement.
GradCheckResult CheckGradient(const LossOf& loss_of, const ParamVector& params, int probes,
                              double h, std::uint64_t seed);

struct GradientChecks {
  GradCheckResult mlp;        // mean log D(x) of a single discriminator
  GradCheckResult mixture_d;  // MixtureDLoss against queue_size generators
  GradCheckResult mixture_g;  // MixtureGLoss against queue_size discriminators
};

// Default architectures with small random biases, noise dimension
// noise_dim, a 16-sample batch and h = 1e-5.
GradientChecks RunGradientChecks(std::uint64_t seed, int probes = 20,
                                 std::size_t queue_size = 3, int noise_dim = 16);

}  // namespace minimax::neural

#endif  // MINIMAX_NEURAL_GRAD_CHECK_H_
