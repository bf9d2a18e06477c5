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

#include "minimax/neural/gauss8.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace minimax::neural {

Matrix ModeCenters(const Gauss8Config& cfg) {
  if (cfg.modes < 1) throw std::invalid_argument("need at least one mode");
  Matrix centers(cfg.modes, 2);
  for (int k = 0; k < cfg.modes; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / cfg.modes;
    centers(k, 0) = cfg.radius * std::cos(angle);
    centers(k, 1) = cfg.radius * std::sin(angle);
  }
  return centers;
}

Matrix SampleGauss8(const Gauss8Config& cfg, int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  const Matrix centers = ModeCenters(cfg);
  std::uniform_int_distribution<int> pick(0, cfg.modes - 1);
  std::normal_distribution<double> noise(0.0, cfg.stddev);
  Matrix out(n, 2);
  for (int i = 0; i < n; ++i) {
    const int k = pick(rng);
    out(i, 0) = centers(k, 0) + noise(rng);
    out(i, 1) = centers(k, 1) + noise(rng);
  }
  return out;
}

Matrix SampleNoise(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out(i, j) = normal(rng);
  }
  return out;
}

Coverage ModeCoverage(const Matrix& samples, const Gauss8Config& cfg) {
  if (samples.rows() < 1 || samples.cols() != 2) {
    throw std::invalid_argument("coverage needs an n x 2 sample matrix, n >= 1");
  }
  const Matrix centers = ModeCenters(cfg);
  const double radius = kQualityRadiusSigmas * cfg.stddev;
  Coverage cov;
  cov.counts.assign(cfg.modes, 0);
  std::int64_t high_quality = 0;
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    int nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < cfg.modes; ++k) {
      const double d = std::hypot(samples(i, 0) - centers(k, 0), samples(i, 1) - centers(k, 1));
      if (d < best) {
        best = d;
        nearest = k;
      }
    }
    if (best <= radius) {
      ++cov.counts[nearest];
      ++high_quality;
    }
  }
  const double n = static_cast<double>(samples.rows());
  for (std::int64_t c : cov.counts) {
    if (static_cast<double>(c) >= kCoveredShare * n) ++cov.covered_modes;
  }
  cov.high_quality_fraction = static_cast<double>(high_quality) / n;
  return cov;
}

}  // namespace minimax::neural
