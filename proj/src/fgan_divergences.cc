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

#include "minimax/fgan_divergences.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace minimax {
namespace {

// Finite stand-ins for open or unbounded ends of a search bracket.
constexpr double kOpenEndInset = 1e-12;
constexpr double kUnboundedCap = 1e3;

std::vector<DivergenceSpec> BuildRegistry() {
  std::vector<DivergenceSpec> specs;
  specs.push_back({"Kullback-Leibler",
                   [](double d) { return std::log(d); },
                   [](double d) { return 1.0 - d; },
                   [](double d) { return 1.0 / d; },
                   [](double) { return -1.0; },
                   Interval{0.0, 1.0, true, false}, 1.0, 0.0, false});
  specs.push_back({"Reverse KL",
                   [](double d) { return -d; },
                   [](double d) { return std::log(d); },
                   [](double) { return -1.0; },
                   [](double d) { return 1.0 / d; },
                   Interval{0.0, kUnboundedCap, true, false}, 1.0, -1.0, false});
  specs.push_back({"Pearson chi^2",
                   [](double d) { return d; },
                   [](double d) { return -0.25 * d * d - d; },
                   [](double) { return 1.0; },
                   [](double d) { return -0.5 * d - 1.0; },
                   Interval{-kUnboundedCap, kUnboundedCap, false, false}, 0.0, 0.0, false});
  specs.push_back({"Squared Hellinger",
                   [](double d) { return 1.0 - d; },
                   [](double d) { return 1.0 - 1.0 / d; },
                   [](double) { return -1.0; },
                   [](double d) { return 1.0 / (d * d); },
                   Interval{0.0, kUnboundedCap, true, false}, 1.0, 0.0, false});
  specs.push_back({"Jensen-Shannon",
                   [](double d) { return std::log(d); },
                   [](double d) { return std::log1p(-d); },
                   [](double d) { return 1.0 / d; },
                   [](double d) { return -1.0 / (1.0 - d); },
                   Interval{0.0, 1.0, true, true}, 0.5, -std::log(4.0), false});
  specs.push_back({"WGAN",
                   [](double d) { return d; },
                   [](double d) { return -d; },
                   [](double) { return 1.0; },
                   [](double) { return -1.0; },
                   Interval{-kUnboundedCap, kUnboundedCap, false, false}, 0.0, 0.0, true});
  return specs;
}

}  // namespace

const std::vector<DivergenceSpec>& Registry() {
  static const std::vector<DivergenceSpec> registry = BuildRegistry();
  return registry;
}

const DivergenceSpec& FindDivergence(const std::string& name) {
  for (const DivergenceSpec& spec : Registry()) {
    if (spec.name == name) return spec;
  }
  throw std::invalid_argument("unknown divergence: " + name);
}

double EvalObjective(const DivergenceSpec& spec, const CategoricalDist& p_d,
                     const CategoricalDist& p_g, std::span<const double> d) {
  if (!p_d.SameSupport(p_g) || d.size() != p_d.size()) {
    throw std::invalid_argument("support mismatch");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!spec.d_domain.Contains(d[i])) {
      throw std::domain_error(spec.name + ": D = " + std::to_string(d[i]) +
                              " outside the admissible domain");
    }
    value += p_d[i] * spec.f0(d[i]) + p_g[i] * spec.f1(d[i]);
  }
  return value;
}

double PointwiseOptimalD(const DivergenceSpec& spec, double pd_mass, double pg_mass) {
  if (!(pd_mass >= 0.0 && pg_mass >= 0.0 && pd_mass + pg_mass > 0.0)) {
    throw std::invalid_argument("masses must be >= 0 with a positive sum");
  }
  if (spec.linear_in_d) return spec.d_star;
  auto objective = [&](double d) { return pd_mass * spec.f0(d) + pg_mass * spec.f1(d); };
  double lo = spec.d_domain.lo_open ? spec.d_domain.lo + kOpenEndInset : spec.d_domain.lo;
  double hi = spec.d_domain.hi_open ? spec.d_domain.hi - kOpenEndInset : spec.d_domain.hi;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = objective(a);
  double fb = objective(b);
  while (hi - lo > kGoldenTolerance) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = objective(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = objective(a);
    }
  }
  const double mid = 0.5 * (lo + hi);
  // The maximizer may sit on a closed boundary; prefer it when it is at
  // least as good as the interior estimate.
  double best = mid;
  double best_val = objective(mid);
  for (double edge : {lo, hi}) {
    const double v = objective(edge);
    if (v > best_val) {
      best = edge;
      best_val = v;
    }
  }
  return best;
}

FixedPointReport CheckFixedPoint(const DivergenceSpec& spec, std::uint64_t seed,
                                 std::size_t support_size) {
  std::mt19937_64 rng(seed);
  const CategoricalDist p_d = CategoricalDist::RandomSimplex(support_size, rng);
  FixedPointReport report;
  report.name = spec.name;
  report.computed_d.resize(support_size);
  for (std::size_t i = 0; i < support_size; ++i) {
    report.computed_d[i] = PointwiseOptimalD(spec, p_d[i], p_d[i]);
    report.max_d_residual =
        std::max(report.max_d_residual, std::abs(report.computed_d[i] - spec.d_star));
  }
  report.computed_value = EvalObjective(spec, p_d, p_d, report.computed_d);
  report.value_residual = std::abs(report.computed_value - spec.game_value);
  report.d_star_ok = report.max_d_residual <= kFixedPointTolerance;
  report.value_ok = report.value_residual <= kFixedPointTolerance;
  return report;
}

}  // namespace minimax
