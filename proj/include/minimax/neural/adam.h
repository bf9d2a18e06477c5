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

#ifndef MINIMAX_NEURAL_ADAM_H_
#define MINIMAX_NEURAL_ADAM_H_

#include <cstdint>
#include <vector>

#include "minimax/neural/mlp.h"

namespace minimax::neural {

struct AdamConfig {
  double lr = 2e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t t = 0;
};

// Bias-corrected Adam descent step, in place. Throws NumericalError on a
// non-finite gradient (params and state are left untouched) and
// std::invalid_argument on a size mismatch.
void AdamStep(ParamVector& params, const ParamVector& grad, AdamState& state,
              const AdamConfig& config);

}  // namespace minimax::neural

#endif  // MINIMAX_NEURAL_ADAM_H_
