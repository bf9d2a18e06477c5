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

#include "minimax/neural/fictitious_gan.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <fmt/ostream.h>

#include "minimax/errors.h"

namespace minimax::neural {
namespace {

enum Stream : std::uint64_t { kInitStream = 1, kDataStream = 2, kNoiseStream = 3, kEvalStream = 4 };

std::mt19937_64 DeriveRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t salt = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(salt),
                    static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

Var ClampedD(Tape& tape, const MlpSpec& d_spec, const ParamVector& d_params, Var input,
             bool trainable, BoundMlp* bound = nullptr) {
  BoundMlp net = ApplyMlp(tape, d_spec, d_params, input, trainable);
  if (bound != nullptr) *bound = net;
  return tape.Clamp(net.output, kLogClamp, 1.0 - kLogClamp);
}

void RequireNonEmpty(const ModelQueue& queue, const char* what) {
  if (queue.empty()) throw InvalidStateError(std::string(what) + " queue is empty");
}

struct Streams {
  std::mt19937_64 data;
  std::mt19937_64 noise;
};

struct Networks {
  ParamVector d;
  ParamVector g;
};

Networks InitNetworks(const FictitiousGanConfig& config) {
  std::mt19937_64 init = DeriveRng(config.seed, kInitStream);
  Networks nets;
  nets.d = InitParams(config.d_spec, init);
  nets.g = InitParams(config.g_spec, init);
  return nets;
}

Streams MakeStreams(const FictitiousGanConfig& config) {
  return Streams{DeriveRng(config.seed, kDataStream), DeriveRng(config.seed, kNoiseStream)};
}

void CheckFinite(const ParamVector& params, const char* which, std::int64_t iter) {
  if (!params.AllFinite()) {
    throw NumericalError(std::string(which) + " parameters became non-finite at outer iteration " +
                         std::to_string(iter));
  }
}

void Step(ParamVector& params, LossTape& loss, AdamState& state, const AdamConfig& adam,
          const char* which, std::int64_t iter) {
  const ParamVector grad = Gradient(loss, params);
  try {
    AdamStep(params, grad, state, adam);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(which) + " at outer iteration " + std::to_string(iter) +
                         ": " + e.what());
  }
  CheckFinite(params, which, iter);
}

bool IsCheckpoint(const FictitiousGanConfig& config, std::int64_t iter) {
  return iter == 0 || iter == config.outer_iters ||
         (config.sample_every > 0 && iter % config.sample_every == 0);
}

SampleDump Checkpoint(const FictitiousGanConfig& config, const ParamVector& g,
                      std::int64_t iter) {
  std::mt19937_64 rng = DeriveRng(config.seed, kEvalStream, static_cast<std::uint64_t>(iter));
  const Matrix noise = SampleNoise(config.eval_samples, config.g_spec.input_dim, rng);
  SampleDump dump;
  dump.iter = iter;
  dump.samples = Evaluate(config.g_spec, g, noise);
  dump.coverage = ModeCoverage(dump.samples, config.gauss8);
  return dump;
}

void RecordCheckpoint(const FictitiousGanConfig& config, const ParamVector& g,
                      std::int64_t iter, TrainResult& result) {
  if (!IsCheckpoint(config, iter)) return;
  SampleDump dump = Checkpoint(config, g, iter);
  if (!result.trace.empty() && result.trace.back().iter == iter) {
    result.trace.back().coverage = dump.coverage;
  }
  result.final_coverage = dump.coverage;
  result.dumps.push_back(std::move(dump));
}

}  // namespace

LossTape MixtureDLoss(const MlpSpec& d_spec, const ParamVector& d_params,
                      const MlpSpec& g_spec, const ModelQueue& generators,
                      const Matrix& data_batch, const Matrix& noise_batch) {
  RequireNonEmpty(generators, "generator");
  if (data_batch.rows() != noise_batch.rows()) {
    throw std::invalid_argument("data and noise minibatches differ in size");
  }
  LossTape lt;
  Tape& tape = lt.tape;
  const Var real = ClampedD(tape, d_spec, d_params, tape.Constant(data_batch),
                            /*trainable=*/true, &lt.net);
  const Var real_term = tape.Mean(tape.Log(real));

  // The same trainable parameter nodes are reused for every fake batch so
  // gradients from all snapshots accumulate on them.
  Var fake_sum;
  for (const ParamVector& g : generators) {
    const Var fake_input = tape.Constant(Evaluate(g_spec, g, noise_batch));
    Var h = fake_input;
    const std::vector<LayerShape> layers = d_spec.Layers();
    for (std::size_t l = 0; l < layers.size(); ++l) {
      h = tape.AddRowVector(tape.MatMul(h, lt.net.weights[l]), lt.net.biases[l]);
      if (layers[l].activation == Activation::kRelu) h = tape.Relu(h);
      if (layers[l].activation == Activation::kSigmoid) h = tape.Sigmoid(h);
    }
    const Var term = tape.Log1m(tape.Clamp(h, kLogClamp, 1.0 - kLogClamp));
    fake_sum = fake_sum.valid() ? tape.Add(fake_sum, term) : term;
  }
  const double inv_k = 1.0 / static_cast<double>(generators.size());
  const Var fake_term = tape.Mean(tape.Scale(fake_sum, inv_k));
  lt.loss = tape.Scale(tape.Add(real_term, fake_term), -1.0);
  return lt;
}

LossTape MixtureGLoss(const MlpSpec& g_spec, const ParamVector& g_params,
                      const MlpSpec& d_spec, const ModelQueue& discriminators,
                      const Matrix& noise_batch) {
  RequireNonEmpty(discriminators, "discriminator");
  LossTape lt;
  Tape& tape = lt.tape;
  lt.net = ApplyMlp(tape, g_spec, g_params, tape.Constant(noise_batch), /*trainable=*/true);
  Var sum;
  for (const ParamVector& d : discriminators) {
    const Var term =
        tape.Log1m(ClampedD(tape, d_spec, d, lt.net.output, /*trainable=*/false));
    sum = sum.valid() ? tape.Add(sum, term) : term;
  }
  const double inv_k = 1.0 / static_cast<double>(discriminators.size());
  lt.loss = tape.Mean(tape.Scale(sum, inv_k));
  return lt;
}

LossTape StandardDLoss(const MlpSpec& d_spec, const ParamVector& d_params,
                       const MlpSpec& g_spec, const ParamVector& g_params,
                       const Matrix& data_batch, const Matrix& noise_batch) {
  LossTape lt;
  Tape& tape = lt.tape;
  const Var real = ClampedD(tape, d_spec, d_params, tape.Constant(data_batch), true, &lt.net);
  const Var fake_input = tape.Constant(Evaluate(g_spec, g_params, noise_batch));
  Var h = fake_input;
  const std::vector<LayerShape> layers = d_spec.Layers();
  for (std::size_t l = 0; l < layers.size(); ++l) {
    h = tape.AddRowVector(tape.MatMul(h, lt.net.weights[l]), lt.net.biases[l]);
    if (layers[l].activation == Activation::kRelu) h = tape.Relu(h);
    if (layers[l].activation == Activation::kSigmoid) h = tape.Sigmoid(h);
  }
  const Var fake = tape.Clamp(h, kLogClamp, 1.0 - kLogClamp);
  lt.loss = tape.Scale(tape.Add(tape.Mean(tape.Log(real)), tape.Mean(tape.Log1m(fake))), -1.0);
  return lt;
}

LossTape StandardGLoss(const MlpSpec& g_spec, const ParamVector& g_params,
                       const MlpSpec& d_spec, const ParamVector& d_params,
                       const Matrix& noise_batch) {
  LossTape lt;
  Tape& tape = lt.tape;
  lt.net = ApplyMlp(tape, g_spec, g_params, tape.Constant(noise_batch), true);
  lt.loss = tape.Mean(tape.Log1m(ClampedD(tape, d_spec, d_params, lt.net.output, false)));
  return lt;
}

ParamVector Gradient(LossTape& loss, const ParamVector& like) {
  return Backward(loss.tape, loss.net, loss.loss, like);
}

void FictitiousGanConfig::Validate() const {
  if (k0 < 1) throw std::invalid_argument("k0 must be >= 1");
  if (queue_capacity < 1) throw std::invalid_argument("queue_capacity must be >= 1");
  if (minibatch < 1) throw std::invalid_argument("minibatch must be >= 1");
  if (outer_iters < 0) throw std::invalid_argument("outer_iters must be >= 0");
  if (!(d_lr > 0.0) || !(g_lr > 0.0) || !std::isfinite(d_lr) || !std::isfinite(g_lr)) {
    throw std::invalid_argument("learning rates must be finite and > 0");
  }
  if (sample_every < 0) throw std::invalid_argument("sample_every must be >= 0");
  if (eval_samples < 1) throw std::invalid_argument("eval_samples must be >= 1");
  if (gauss8.modes < 1 || !(gauss8.stddev > 0.0) || !(gauss8.radius > 0.0)) {
    throw std::invalid_argument("bad mixture configuration");
  }
  if (gauss8.noise_dim < 1 || g_spec.input_dim != gauss8.noise_dim) {
    throw std::invalid_argument("generator input must equal the noise dimension");
  }
  if (d_spec.input_dim != 2 || g_spec.output_dim != 2 || d_spec.output_dim != 1) {
    throw std::invalid_argument("networks must map noise -> R^2 -> [0, 1]");
  }
}

FictitiousGanConfig FictitiousGanConfig::FullScale() {
  FictitiousGanConfig config;
  config.gauss8.noise_dim = 256;
  config.g_spec = MlpSpec::Generator(256);
  config.outer_iters = 34000;
  config.sample_every = 10000;
  return config;
}

TrainResult TrainFictitiousGan(const FictitiousGanConfig& config) {
  config.Validate();
  Networks nets = InitNetworks(config);
  Streams streams = MakeStreams(config);
  const AdamConfig d_adam{config.d_lr};
  const AdamConfig g_adam{config.g_lr};
  AdamState d_state, g_state;

  TrainResult result;
  result.d_queue = ModelQueue(config.queue_capacity);
  result.g_queue = ModelQueue(config.queue_capacity);
  result.d_queue.Push(nets.d);
  result.g_queue.Push(nets.g);
  RecordCheckpoint(config, nets.g, 0, result);

  for (std::int64_t iter = 1; iter <= config.outer_iters; ++iter) {
    TrainRecord rec;
    rec.iter = iter;
    for (int k = 0; k < config.k0; ++k) {
      const Matrix data = SampleGauss8(config.gauss8, config.minibatch, streams.data);
      const Matrix noise = SampleNoise(config.minibatch, config.gauss8.noise_dim, streams.noise);
      LossTape loss = MixtureDLoss(config.d_spec, nets.d, config.g_spec, result.g_queue, data, noise);
      rec.d_loss = loss.value();
      Step(nets.d, loss, d_state, d_adam, "discriminator", iter);
    }
    result.d_queue.Push(nets.d);
    for (int k = 0; k < config.k0; ++k) {
      const Matrix noise = SampleNoise(config.minibatch, config.gauss8.noise_dim, streams.noise);
      LossTape loss = MixtureGLoss(config.g_spec, nets.g, config.d_spec, result.d_queue, noise);
      rec.g_loss = loss.value();
      Step(nets.g, loss, g_state, g_adam, "generator", iter);
    }
    result.g_queue.Push(nets.g);
    rec.d_queue_size = result.d_queue.size();
    rec.g_queue_size = result.g_queue.size();
    result.trace.push_back(std::move(rec));
    RecordCheckpoint(config, nets.g, iter, result);
  }
  result.d_params = std::move(nets.d);
  result.g_params = std::move(nets.g);
  return result;
}

TrainResult TrainStandardGan(const FictitiousGanConfig& config) {
  config.Validate();
  Networks nets = InitNetworks(config);
  Streams streams = MakeStreams(config);
  const AdamConfig d_adam{config.d_lr};
  const AdamConfig g_adam{config.g_lr};
  AdamState d_state, g_state;

  TrainResult result;
  RecordCheckpoint(config, nets.g, 0, result);
  for (std::int64_t iter = 1; iter <= config.outer_iters; ++iter) {
    TrainRecord rec;
    rec.iter = iter;
    for (int k = 0; k < config.k0; ++k) {
      const Matrix data = SampleGauss8(config.gauss8, config.minibatch, streams.data);
      const Matrix noise = SampleNoise(config.minibatch, config.gauss8.noise_dim, streams.noise);
      LossTape loss = StandardDLoss(config.d_spec, nets.d, config.g_spec, nets.g, data, noise);
      rec.d_loss = loss.value();
      Step(nets.d, loss, d_state, d_adam, "discriminator", iter);
    }
    for (int k = 0; k < config.k0; ++k) {
      const Matrix noise = SampleNoise(config.minibatch, config.gauss8.noise_dim, streams.noise);
      LossTape loss = StandardGLoss(config.g_spec, nets.g, config.d_spec, nets.d, noise);
      rec.g_loss = loss.value();
      Step(nets.g, loss, g_state, g_adam, "generator", iter);
    }
    rec.d_queue_size = 1;
    rec.g_queue_size = 1;
    result.trace.push_back(std::move(rec));
    RecordCheckpoint(config, nets.g, iter, result);
  }
  result.d_queue.Push(nets.d);
  result.g_queue.Push(nets.g);
  result.d_params = std::move(nets.d);
  result.g_params = std::move(nets.g);
  return result;
}

void WriteTrainCsv(std::ostream& out, const std::vector<TrainRecord>& trace) {
  out << "iter,d_loss,g_loss,covered_modes,hq_fraction\n";
  for (const TrainRecord& r : trace) {
    fmt::print(out, "{},{},{},", r.iter, r.d_loss, r.g_loss);
    if (r.coverage) {
      fmt::print(out, "{},{}\n", r.coverage->covered_modes, r.coverage->high_quality_fraction);
    } else {
      out << ",\n";
    }
  }
}

void WriteSamplesCsv(std::ostream& out, const Matrix& samples) {
  out << "x,y\n";
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    fmt::print(out, "{},{}\n", samples(i, 0), samples(i, 1));
  }
}

}  // namespace minimax::neural
