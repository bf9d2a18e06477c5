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

#include "minimax/neural/grad_check.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "minimax/neural/gauss8.h"

namespace minimax::neural {
namespace {

constexpr double kStep = 1e-5;
constexpr int kBatch = 16;

ParamVector InitWithBiases(const MlpSpec& spec, std::mt19937_64& rng) {
  ParamVector p = InitParams(spec, rng);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (std::size_t l = 0; l < p.slots().size(); ++l) {
    auto b = p.Bias(l);
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(0, j) = u(rng);
  }
  return p;
}

}  // namespace

double GradRelativeError(double analytic, double numeric) {
  return std::abs(analytic - numeric) /
         std::max({std::abs(analytic), std::abs(numeric), kGradErrorFloor});
}

GradCheckResult CheckGradient(const LossOf& loss_of, const ParamVector& params, int probes,
                              double h, std::uint64_t seed) {
  if (probes < 1 || params.size() == 0) throw std::invalid_argument("nothing to probe");
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be > 0");
  LossTape lt = loss_of(params);
  const ParamVector grad = Gradient(lt, params);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, params.size() - 1);
  GradCheckResult result;
  result.probes = probes;
  for (int k = 0; k < probes; ++k) {
    const std::size_t i = pick(rng);
    ParamVector plus = params, minus = params;
    plus[i] += h;
    minus[i] -= h;
    const double numeric = (loss_of(plus).value() - loss_of(minus).value()) / (2.0 * h);
    result.max_rel_error = std::max(result.max_rel_error, GradRelativeError(grad[i], numeric));
  }
  return result;
}

GradientChecks RunGradientChecks(std::uint64_t seed, int probes, std::size_t queue_size,
                                 int noise_dim) {
  const MlpSpec d_spec = MlpSpec::Discriminator();
  const MlpSpec g_spec = MlpSpec::Generator(noise_dim);
  std::mt19937_64 rng(seed);
  Gauss8Config gauss;
  gauss.noise_dim = noise_dim;
  const ParamVector d = InitWithBiases(d_spec, rng);
  const ParamVector g = InitWithBiases(g_spec, rng);
  const Matrix data = SampleGauss8(gauss, kBatch, rng);
  const Matrix noise = SampleNoise(kBatch, noise_dim, rng);
  ModelQueue generators(queue_size), discriminators(queue_size);
  for (std::size_t i = 0; i < queue_size; ++i) {
    generators.Push(InitWithBiases(g_spec, rng));
    discriminators.Push(InitWithBiases(d_spec, rng));
  }

  GradientChecks out;
  out.mlp = CheckGradient(
      [&](const ParamVector& p) {
        ForwardPass fp = Forward(d_spec, p, data);
        const Var loss = fp.tape.Mean(fp.tape.Log(fp.net.output));
        return LossTape{std::move(fp.tape), fp.net, loss};
      },
      d, probes, kStep, seed + 1);
  out.mixture_d = CheckGradient(
      [&](const ParamVector& p) {
        return MixtureDLoss(d_spec, p, g_spec, generators, data, noise);
      },
      d, probes, kStep, seed + 2);
  out.mixture_g = CheckGradient(
      [&](const ParamVector& p) { return MixtureGLoss(g_spec, p, d_spec, discriminators, noise); },
      g, probes, kStep, seed + 3);
  return out;
}

}  // namespace minimax::neural
