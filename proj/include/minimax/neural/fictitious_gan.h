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

#ifndef MINIMAX_NEURAL_FICTITIOUS_GAN_H_
#define MINIMAX_NEURAL_FICTITIOUS_GAN_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "minimax/neural/adam.h"
#include "minimax/neural/gauss8.h"
#include "minimax/neural/mlp.h"
#include "minimax/neural/model_queue.h"
#include "minimax/neural/tape.h"

namespace minimax::neural {

// Discriminator outputs are clamped into [kLogClamp, 1 - kLogClamp] before
// any log.
inline constexpr double kLogClamp = 1e-7;

// A scalar loss recorded on a tape, differentiable w.r.t. `net`.
struct LossTape {
  Tape tape;
  BoundMlp net;
  Var loss;

  double value() const { return tape.scalar(loss); }
};

// Negated discriminator objective against a generator mixture:
//   -(1/m) sum_i [log D(x_i) + (1/|G|) sum_{G_w} log(1 - D(G_w(z_i)))].
// Generator snapshots are evaluated without a tape. Throws
// InvalidStateError on an empty queue.
LossTape MixtureDLoss(const MlpSpec& d_spec, const ParamVector& d_params,
                      const MlpSpec& g_spec, const ModelQueue& generators,
                      const Matrix& data_batch, const Matrix& noise_batch);

// Generator objective against a discriminator mixture:
//   (1/(m |D|)) sum_i sum_{D_w} log(1 - D_w(G(z_i))).
// Discriminator snapshots enter as constants. Throws InvalidStateError on
// an empty queue.
LossTape MixtureGLoss(const MlpSpec& g_spec, const ParamVector& g_params,
                      const MlpSpec& d_spec, const ModelQueue& discriminators,
                      const Matrix& noise_batch);

// Single-opponent losses of the standard alternating scheme.
LossTape StandardDLoss(const MlpSpec& d_spec, const ParamVector& d_params,
                       const MlpSpec& g_spec, const ParamVector& g_params,
                       const Matrix& data_batch, const Matrix& noise_batch);
LossTape StandardGLoss(const MlpSpec& g_spec, const ParamVector& g_params,
                       const MlpSpec& d_spec, const ParamVector& d_params,
                       const Matrix& noise_batch);

ParamVector Gradient(LossTape& loss, const ParamVector& like);

struct FictitiousGanConfig {
  MlpSpec d_spec = MlpSpec::Discriminator();
  MlpSpec g_spec = MlpSpec::Generator(16);
  Gauss8Config gauss8;
  int k0 = 3;
  std::size_t queue_capacity = 5;
  int minibatch = 64;
  std::int64_t outer_iters = 5000;
  double d_lr = 2e-4;
  double g_lr = 1.2e-4;
  std::uint64_t seed = 0;
  // Coverage is measured and samples are dumped every sample_every outer
  // iterations (and at 0 and the end). 0 disables intermediate dumps.
  std::int64_t sample_every = 1000;
  int eval_samples = 10000;

  // Throws std::invalid_argument on non-positive sizes or rates.
  void Validate() const;
  // 256-dimensional noise and 34k outer iterations.
  static FictitiousGanConfig FullScale();
};

struct TrainRecord {
  std::int64_t iter = 0;
  double d_loss = 0.0;  // last discriminator step of the iteration
  double g_loss = 0.0;  // last generator step of the iteration
  std::size_t d_queue_size = 0;
  std::size_t g_queue_size = 0;
  std::optional<Coverage> coverage;
};

struct SampleDump {
  std::int64_t iter = 0;
  Matrix samples;
  Coverage coverage;
};

struct TrainResult {
  std::vector<TrainRecord> trace;
  std::vector<SampleDump> dumps;
  ParamVector d_params;
  ParamVector g_params;
  ModelQueue d_queue{1};
  ModelQueue g_queue{1};
  Coverage final_coverage;
};

// Fictitious GAN: per outer iteration, k0 Adam steps on the discriminator
// against the generator queue, then its snapshot is pushed; k0 Adam steps on
// the generator against the discriminator queue, then its snapshot is
// pushed. The freshly
// initialized networks seed both queues. Throws NumericalError (naming the
// iteration) if parameters become non-finite.
TrainResult TrainFictitiousGan(const FictitiousGanConfig& config);

// Standard alternating training with the same schedule and random streams
// but without queues; queue_capacity is ignored.
TrainResult TrainStandardGan(const FictitiousGanConfig& config);

// iter, d_loss, g_loss, covered_modes, hq_fraction
void WriteTrainCsv(std::ostream& out, const std::vector<TrainRecord>& trace);
// x, y
void WriteSamplesCsv(std::ostream& out, const Matrix& samples);

}  // namespace minimax::neural

#endif  // MINIMAX_NEURAL_FICTITIOUS_GAN_H_
