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

#ifndef MINIMAX_NEURAL_MLP_H_
#define MINIMAX_NEURAL_MLP_H_

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "minimax/neural/tape.h"

namespace minimax::neural {

enum class Activation { kRelu, kLinear, kSigmoid };

enum class InitScheme { kXavierUniform, kZeros };

struct LayerShape {
  int in = 0;
  int out = 0;
  Activation activation = Activation::kRelu;
};

// Fully connected network: ReLU hidden layers, then `head` on the output.
struct MlpSpec {
  int input_dim = 0;
  std::vector<int> hidden;
  int output_dim = 1;
  Activation head = Activation::kLinear;
  InitScheme init = InitScheme::kXavierUniform;

  // noise_dim -> 128 -> 128 -> 2, linear head.
  static MlpSpec Generator(int noise_dim);
  // 2 -> 128 -> 1, sigmoid head.
  static MlpSpec Discriminator();

  std::vector<LayerShape> Layers() const;
  std::size_t NumParams() const;
};

// Flat parameter storage. Layer l owns an in x out weight block (column
// major, matching Eigen) followed by a 1 x out bias.
class ParamVector {
 public:
  struct Slot {
    int rows = 0;
    int cols = 0;
    std::size_t weight_offset = 0;
    std::size_t bias_offset = 0;
    bool operator==(const Slot&) const = default;
  };

  ParamVector() = default;
  explicit ParamVector(const MlpSpec& spec);  // zeros

  std::size_t size() const { return data_.size(); }
  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }
  const std::vector<Slot>& slots() const { return slots_; }

  Eigen::Map<const Matrix> Weight(std::size_t layer) const;
  Eigen::Map<Matrix> Weight(std::size_t layer);
  Eigen::Map<const Matrix> Bias(std::size_t layer) const;
  Eigen::Map<Matrix> Bias(std::size_t layer);

  bool AllFinite() const;
  bool SameLayout(const ParamVector& other) const;
  bool operator==(const ParamVector& other) const = default;

 private:
  std::vector<double> data_;
  std::vector<Slot> slots_;
};

// Zero biases; weights per spec.init. Xavier draws U(-a, a) with
// a = sqrt(6 / (fan_in + fan_out)).
ParamVector InitParams(const MlpSpec& spec, std::mt19937_64& rng);

// The network as recorded on a tape.
struct BoundMlp {
  std::vector<Var> weights;
  std::vector<Var> biases;
  Var output;
};

// Records the network on `tape`. With trainable = false the parameters
// enter as constants: gradients still reach `input` but not the weights.
BoundMlp ApplyMlp(Tape& tape, const MlpSpec& spec, const ParamVector& params,
                  Var input, bool trainable);

// Plain evaluation without a tape.
Matrix Evaluate(const MlpSpec& spec, const ParamVector& params, const Matrix& batch);

struct ForwardPass {
  Tape tape;
  BoundMlp net;
  Var input;
};

// Network outputs plus the tape needed to differentiate them. Throws
// std::invalid_argument when batch.cols() != spec.input_dim.
ForwardPass Forward(const MlpSpec& spec, const ParamVector& params, const Matrix& batch);

// Runs Backward on `loss` and collects the parameter gradient of `net`.
ParamVector Backward(Tape& tape, const BoundMlp& net, Var loss, const ParamVector& like,
                     double loss_adjoint = 1.0);

}  // namespace minimax::neural

#endif  // MINIMAX_NEURAL_MLP_H_
