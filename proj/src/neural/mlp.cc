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

#include "minimax/neural/mlp.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace minimax::neural {
namespace {

constexpr int kHiddenWidth = 128;

Matrix ApplyActivation(Matrix x, Activation act) {
  switch (act) {
    case Activation::kRelu:
      return x.cwiseMax(0.0);
    case Activation::kSigmoid:
      return x.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
    case Activation::kLinear:
      return x;
  }
  return x;
}

Var ApplyActivation(Tape& tape, Var x, Activation act) {
  switch (act) {
    case Activation::kRelu:
      return tape.Relu(x);
    case Activation::kSigmoid:
      return tape.Sigmoid(x);
    case Activation::kLinear:
      return x;
  }
  return x;
}

}  // namespace

MlpSpec MlpSpec::Generator(int noise_dim) {
  return MlpSpec{noise_dim, {kHiddenWidth, kHiddenWidth}, 2, Activation::kLinear,
                 InitScheme::kXavierUniform};
}

MlpSpec MlpSpec::Discriminator() {
  return MlpSpec{2, {kHiddenWidth}, 1, Activation::kSigmoid, InitScheme::kXavierUniform};
}

std::vector<LayerShape> MlpSpec::Layers() const {
  if (input_dim <= 0 || output_dim <= 0) throw std::invalid_argument("bad MLP dims");
  std::vector<LayerShape> layers;
  int in = input_dim;
  for (int width : hidden) {
    if (width <= 0) throw std::invalid_argument("bad hidden width");
    layers.push_back({in, width, Activation::kRelu});
    in = width;
  }
  layers.push_back({in, output_dim, head});
  return layers;
}

std::size_t MlpSpec::NumParams() const {
  std::size_t n = 0;
  for (const LayerShape& l : Layers()) {
    n += static_cast<std::size_t>(l.in) * l.out + static_cast<std::size_t>(l.out);
  }
  return n;
}

ParamVector::ParamVector(const MlpSpec& spec) {
  std::size_t offset = 0;
  for (const LayerShape& l : spec.Layers()) {
    Slot slot;
    slot.rows = l.in;
    slot.cols = l.out;
    slot.weight_offset = offset;
    offset += static_cast<std::size_t>(l.in) * l.out;
    slot.bias_offset = offset;
    offset += static_cast<std::size_t>(l.out);
    slots_.push_back(slot);
  }
  data_.assign(offset, 0.0);
}

Eigen::Map<const Matrix> ParamVector::Weight(std::size_t layer) const {
  const Slot& s = slots_.at(layer);
  return Eigen::Map<const Matrix>(data_.data() + s.weight_offset, s.rows, s.cols);
}

Eigen::Map<Matrix> ParamVector::Weight(std::size_t layer) {
  const Slot& s = slots_.at(layer);
  return Eigen::Map<Matrix>(data_.data() + s.weight_offset, s.rows, s.cols);
}

Eigen::Map<const Matrix> ParamVector::Bias(std::size_t layer) const {
  const Slot& s = slots_.at(layer);
  return Eigen::Map<const Matrix>(data_.data() + s.bias_offset, 1, s.cols);
}

Eigen::Map<Matrix> ParamVector::Bias(std::size_t layer) {
  const Slot& s = slots_.at(layer);
  return Eigen::Map<Matrix>(data_.data() + s.bias_offset, 1, s.cols);
}

bool ParamVector::AllFinite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool ParamVector::SameLayout(const ParamVector& other) const {
  return slots_ == other.slots_ && data_.size() == other.data_.size();
}

ParamVector InitParams(const MlpSpec& spec, std::mt19937_64& rng) {
  ParamVector params(spec);
  if (spec.init == InitScheme::kZeros) return params;
  for (std::size_t l = 0; l < params.slots().size(); ++l) {
    const auto& slot = params.slots()[l];
    const double limit = std::sqrt(6.0 / static_cast<double>(slot.rows + slot.cols));
    std::uniform_real_distribution<double> dist(-limit, limit);
    auto w = params.Weight(l);
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      for (Eigen::Index i = 0; i < w.rows(); ++i) w(i, j) = dist(rng);
    }
  }
  return params;
}

BoundMlp ApplyMlp(Tape& tape, const MlpSpec& spec, const ParamVector& params, Var input,
                  bool trainable) {
  const std::vector<LayerShape> layers = spec.Layers();
  if (params.slots().size() != layers.size()) {
    throw std::invalid_argument("parameters do not match the MLP spec");
  }
  if (tape.value(input).cols() != spec.input_dim) {
    throw std::invalid_argument("batch has " + std::to_string(tape.value(input).cols()) +
                                " columns, network expects " +
                                std::to_string(spec.input_dim));
  }
  BoundMlp net;
  Var h = input;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    Matrix w = params.Weight(l);
    Matrix b = params.Bias(l);
    const Var wv = trainable ? tape.Leaf(std::move(w)) : tape.Constant(std::move(w));
    const Var bv = trainable ? tape.Leaf(std::move(b)) : tape.Constant(std::move(b));
    net.weights.push_back(wv);
    net.biases.push_back(bv);
    h = ApplyActivation(tape, tape.AddRowVector(tape.MatMul(h, wv), bv),
                        layers[l].activation);
  }
  net.output = h;
  return net;
}

Matrix Evaluate(const MlpSpec& spec, const ParamVector& params, const Matrix& batch) {
  const std::vector<LayerShape> layers = spec.Layers();
  if (params.slots().size() != layers.size()) {
    throw std::invalid_argument("parameters do not match the MLP spec");
  }
  if (batch.cols() != spec.input_dim) {
    throw std::invalid_argument("batch has " + std::to_string(batch.cols()) +
                                " columns, network expects " +
                                std::to_string(spec.input_dim));
  }
  Matrix h = batch;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    Matrix z = h * params.Weight(l);
    z.rowwise() += params.Bias(l).row(0);
    h = ApplyActivation(std::move(z), layers[l].activation);
  }
  return h;
}

ForwardPass Forward(const MlpSpec& spec, const ParamVector& params, const Matrix& batch) {
  ForwardPass pass;
  pass.input = pass.tape.Constant(batch);
  pass.net = ApplyMlp(pass.tape, spec, params, pass.input, /*trainable=*/true);
  return pass;
}

ParamVector Backward(Tape& tape, const BoundMlp& net, Var loss, const ParamVector& like,
                     double loss_adjoint) {
  tape.Backward(loss, loss_adjoint);
  ParamVector grad = like;
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    grad.Weight(l) = tape.grad(net.weights[l]);
    grad.Bias(l) = tape.grad(net.biases[l]);
  }
  return grad;
}

}  // namespace minimax::neural
