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

#include "minimax/experiments/criteria.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace minimax::experiments {

namespace {

std::vector<Criterion> BuildCriteria() {
  using C = Comparison;
  return {
      // Best-response oscillation on the Bernoulli example.
      {"br_oscillation_mismatches", "iterations 1..100 off the delta(1)/delta(0) alternation",
       0, 0, C::kEquals},
      {"br_runtime_s", "best-response run time (s)", 0, 0.1, C::kBelow},

      // Discrete fictitious play on the Bernoulli example.
      {"fp_pbar_l1", "|pbar_g - p_d|_1 at the final iteration", 0, 0.01, C::kAtMost},
      {"d_gap", "D_n(x) farthest from 1/2 over supp(p_d)", 0.5, 0.01, C::kWithin},
      {"fp_discrete_runtime_s", "discrete fictitious play run time (s)", 0, 1.0, C::kBelow},

      // Gradient descent-ascent on u(x, y) = x y.
      {"norm_ratio_residual", "max relative deviation of |z_n+1|/|z_n| from sqrt(1+step^2)", 0,
       1e-12, C::kAtMost},
      {"closed_form_residual", "max relative distance closed form vs iterated map", 0, 1e-9,
       C::kAtMost},
      {"divergence_flag", "norm exceeded 10x its initial value", 1, 0, C::kEquals, true},
      {"gda_runtime_s", "GDA run time (s)", 0, 0.5, C::kBelow},

      // Fictitious play on the bilinear game.
      {"fp_freq_p1_high", "player 1 empirical frequency of the upper endpoint", 0.5, 0.01,
       C::kWithin},
      {"fp_freq_p2_high", "player 2 empirical frequency of the upper endpoint", 0.5, 0.01,
       C::kWithin},
      {"fp_avg_utility", "expected utility at the empirical profile", 0, 0.05, C::kWithin},
      {"fp_eps_nash_gain", "max unilateral gain on the two-endpoint game", 0, 0.3, C::kAtMost},
      {"fp_bilinear_runtime_s", "bilinear fictitious play run time (s)", 0, 1.0, C::kBelow},

      // Discrete GAN game.
      {"equilibrium_value_residual", "max |V(p_d, p_d, 1/2) + log 4| over random p_d", 0, 1e-12,
       C::kAtMost},
      {"jsd_final", "max JSD(pbar_g || p_d) at the final iteration over trials", 0, 0.01,
       C::kAtMost},
      {"jsd_identity_residual", "max |V(pbar, D_n) - (2 JSD - log 4)| over all iterations", 0,
       1e-9, C::kAtMost},
      {"gan_discrete_runtime_s", "discrete GAN trials run time (s)", 0, 5.0, C::kBelow},

      // f-GAN family.
      {"fgan_d_star_residual", "max |D - D*| over divergences and support points", 0, 1e-6,
       C::kAtMost},
      {"fgan_value_residual", "max |V - tabulated value| over divergences", 0, 1e-6, C::kAtMost},
      {"fgan_runtime_s", "fixed-point checks run time (s)", 0, 1.0, C::kBelow},

      // Neural training.
      {"grad_mlp_rel_error", "max relative error, MLP loss vs finite differences", 0, 1e-5,
       C::kBelow},
      {"grad_mixture_d_rel_error", "max relative error, mixture D loss vs finite differences", 0,
       1e-5, C::kBelow},
      {"grad_mixture_g_rel_error", "max relative error, mixture G loss vs finite differences", 0,
       1e-5, C::kBelow},
      {"grad_runtime_s", "gradient checks run time (s)", 0, 5.0, C::kBelow},
      {"degeneracy_mismatches", "capacity-1 vs standard training, differing parameters", 0, 0,
       C::kEquals},
      {"gauss8_covered_modes", "modes covered at the final checkpoint", 8, 0, C::kAtLeast},
      {"gauss8_hq_fraction", "share of samples within 4 sigma of a mode", 0.5, 0, C::kAtLeast},
      {"gauss8_seed_passes", "seeds meeting both coverage thresholds", 4, 0, C::kAtLeast},

      // Queue-capacity sweep, reported only.
      {"queue_sweep_median_nondecreasing", "median covered modes non-decreasing in capacity", 1,
       0, C::kRecorded, true},
  };
}

}  // namespace

std::string_view ComparisonName(Comparison c) {
  switch (c) {
    case Comparison::kWithin:
      return "within";
    case Comparison::kAtMost:
      return "at_most";
    case Comparison::kBelow:
      return "below";
    case Comparison::kAtLeast:
      return "at_least";
    case Comparison::kEquals:
      return "equals";
    case Comparison::kRecorded:
      return "recorded";
  }
  return "unknown";
}

Comparison ComparisonFromName(std::string_view name) {
  for (Comparison c : {Comparison::kWithin, Comparison::kAtMost, Comparison::kBelow,
                       Comparison::kAtLeast, Comparison::kEquals, Comparison::kRecorded}) {
    if (ComparisonName(c) == name) return c;
  }
  throw std::invalid_argument("unknown comparison: " + std::string(name));
}

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> kCriteria = BuildCriteria();
  return kCriteria;
}

const Criterion& FindCriterion(std::string_view id) {
  for (const Criterion& c : Criteria()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown criterion: " + std::string(id));
}

bool Passes(const Criterion& c, double observed) {
  if (std::isnan(observed)) return c.comparison == Comparison::kRecorded;
  switch (c.comparison) {
    case Comparison::kWithin:
      return std::abs(observed - c.expected) <= c.tolerance;
    case Comparison::kAtMost:
      return observed <= c.expected + c.tolerance;
    case Comparison::kBelow:
      return observed < c.expected + c.tolerance;
    case Comparison::kAtLeast:
      return observed >= c.expected - c.tolerance;
    case Comparison::kEquals:
      return observed == c.expected;
    case Comparison::kRecorded:
      return true;
  }
  return false;
}

CheckResult Check(std::string_view id, double observed) {
  const Criterion& c = FindCriterion(id);
  return CheckResult{c.id,         c.expected, observed, c.tolerance,
                     c.comparison, c.boolean,  Passes(c, observed)};
}

}  // namespace minimax::experiments
