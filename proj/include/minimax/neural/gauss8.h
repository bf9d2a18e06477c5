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

#ifndef MINIMAX_NEURAL_GAUSS8_H_
#define MINIMAX_NEURAL_GAUSS8_H_

#include <cstdint>
#include <random>
#include <vector>

#include "minimax/neural/tape.h"

namespace minimax::neural {

// Mixture of equiprobable isotropic Gaussians on a circle.
struct Gauss8Config {
  int modes = 8;
  double radius = 1.0;
  double stddev = 0.02;
  // Generator input size. 256 at full scale.
  int noise_dim = 16;
  std::uint64_t seed = 0;
};

// modes x 2, row k at angle 2 pi k / modes.
Matrix ModeCenters(const Gauss8Config& cfg);

// n x 2 draws. Throws std::invalid_argument for n < 1.
Matrix SampleGauss8(const Gauss8Config& cfg, int n, std::mt19937_64& rng);

// rows x cols standard normal noise.
Matrix SampleNoise(int rows, int cols, std::mt19937_64& rng);

struct Coverage {
  // Samples assigned to each mode (nearest center) that lie within
  // kQualityRadiusSigmas standard deviations of it.
  std::vector<std::int64_t> counts;
  int covered_modes = 0;
  double high_quality_fraction = 0.0;
};

inline constexpr double kQualityRadiusSigmas = 4.0;
inline constexpr double kCoveredShare = 0.02;

// A mode is covered when its high-quality count reaches kCoveredShare of
// all samples.
Coverage ModeCoverage(const Matrix& samples, const Gauss8Config& cfg);

}  // namespace minimax::neural

#endif  // MINIMAX_NEURAL_GAUSS8_H_
