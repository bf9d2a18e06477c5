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

#ifndef MINIMAX_NEURAL_TAPE_H_
#define MINIMAX_NEURAL_TAPE_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace minimax::neural {

using Matrix = Eigen::MatrixXd;

// Handle to a node on a Tape.
struct Var {
  std::int32_t id = -1;
  bool valid() const { return id >= 0; }
};

// Reverse-mode automatic differentiation over dense matrices. Operations
// append nodes in evaluation order; Backward walks them in reverse.
class Tape {
 public:
  // Value with no gradient.
  Var Constant(Matrix value);
  // Differentiable input; its gradient is available after Backward.
  Var Leaf(Matrix value);

  Var MatMul(Var a, Var b);
  // a (n x k) plus a 1 x k row broadcast over rows.
  Var AddRowVector(Var a, Var row);
  Var Add(Var a, Var b);
  Var Sub(Var a, Var b);
  Var Mul(Var a, Var b);  // elementwise
  Var Scale(Var a, double s);
  Var Relu(Var a);
  Var Sigmoid(Var a);
  Var Log(Var a);
  // log(1 - a)
  Var Log1m(Var a);
  // Gradient passes only where lo <= a <= hi.
  Var Clamp(Var a, double lo, double hi);
  Var Square(Var a);
  Var Sum(Var a);   // 1 x 1
  Var Mean(Var a);  // 1 x 1

  const Matrix& value(Var v) const { return nodes_[Index(v)].value; }
  double scalar(Var v) const;
  // Zero matrix for nodes that do not lead to the differentiated output.
  const Matrix& grad(Var v) const;

  // Accumulates d(output)/d(node) * seed into every node that depends on a
  // Leaf. Output must be 1 x 1. Calling again recomputes from scratch.
  void Backward(Var output, double seed = 1.0);

  std::size_t size() const { return nodes_.size(); }

 private:
  enum class Op {
    kConstant, kLeaf, kMatMul, kAddRowVector, kAdd, kSub, kMul, kScale,
    kRelu, kSigmoid, kLog, kLog1m, kClamp, kSquare, kSum, kMean
  };

  struct Node {
    Op op;
    std::int32_t a = -1;
    std::int32_t b = -1;
    double p0 = 0.0;
    double p1 = 0.0;
    bool needs_grad = false;
    Matrix value;
    Matrix grad;
  };

  std::size_t Index(Var v) const;
  Var Push(Op op, Matrix value, Var a = {}, Var b = {}, double p0 = 0.0,
           double p1 = 0.0);
  bool NeedsGrad(Var v) const { return v.valid() && nodes_[Index(v)].needs_grad; }

  std::vector<Node> nodes_;
};

}  // namespace minimax::neural

#endif  // MINIMAX_NEURAL_TAPE_H_
