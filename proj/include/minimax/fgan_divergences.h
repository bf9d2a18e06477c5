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

#ifndef MINIMAX_FGAN_DIVERGENCES_H_
#define MINIMAX_FGAN_DIVERGENCES_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "minimax/gan_discrete.h"

namespace minimax {

// Admissible discriminator outputs. Open ends exclude the endpoint.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool lo_open = true;
  bool hi_open = true;

  bool Contains(double v) const {
    return (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
  }
};

using ScalarFn = std::function<double(double)>;

// V(G, D) = E_{p_d} f0(D(x)) + E_{p_g} f1(D(x)) for one member of the
// f-GAN family.
struct DivergenceSpec {
  std::string name;
  ScalarFn f0, f1;
  ScalarFn df0, df1;
  Interval d_domain;
  double d_star = 0.0;
  double game_value = 0.0;
  // The objective is linear in D and has no pointwise maximizer; d_star is
  // a convention rather than an optimum.
  bool linear_in_d = false;
};

// Kullback-Leibler, Reverse KL, Pearson chi^2, Squared Hellinger,
// Jensen-Shannon, WGAN, in that order.
const std::vector<DivergenceSpec>& Registry();
const DivergenceSpec& FindDivergence(const std::string& name);

// Throws std::domain_error if any D value lies outside spec.d_domain.
double EvalObjective(const DivergenceSpec& spec, const CategoricalDist& p_d,
                     const CategoricalDist& p_g, std::span<const double> d);

// Maximizer of pd * f0(D) + pg * f1(D) over the domain, by golden-section
// search to kGoldenTolerance. Linear (WGAN) specs return d_star.
inline constexpr double kGoldenTolerance = 1e-8;
double PointwiseOptimalD(const DivergenceSpec& spec, double pd_mass, double pg_mass);

struct FixedPointReport {
  std::string name;
  bool d_star_ok = false;
  bool value_ok = false;
  double max_d_residual = 0.0;
  double value_residual = 0.0;
  double computed_value = 0.0;
  std::vector<double> computed_d;
};

inline constexpr double kFixedPointTolerance = 1e-6;

// Draws a random p_d (support_size labels), sets p_g = p_d, and compares the
// pointwise optima and the resulting objective with the tabulated D* and
// game value.
FixedPointReport CheckFixedPoint(const DivergenceSpec& spec, std::uint64_t seed = 7,
                                 std::size_t support_size = 8);

}  // namespace minimax

#endif  // MINIMAX_FGAN_DIVERGENCES_H_
