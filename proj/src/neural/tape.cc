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

#include "minimax/neural/tape.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace minimax::neural {
namespace {

void RequireSameShape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

}  // namespace

std::size_t Tape::Index(Var v) const {
  if (v.id < 0 || static_cast<std::size_t>(v.id) >= nodes_.size()) {
    throw std::invalid_argument("Var does not belong to this tape");
  }
  return static_cast<std::size_t>(v.id);
}

Var Tape::Push(Op op, Matrix value, Var a, Var b, double p0, double p1) {
  Node node;
  node.op = op;
  node.a = a.id;
  node.b = b.id;
  node.p0 = p0;
  node.p1 = p1;
  node.needs_grad = op == Op::kLeaf || NeedsGrad(a) || NeedsGrad(b);
  node.value = std::move(value);
  nodes_.push_back(std::move(node));
  return Var{static_cast<std::int32_t>(nodes_.size() - 1)};
}

Var Tape::Constant(Matrix value) { return Push(Op::kConstant, std::move(value)); }

Var Tape::Leaf(Matrix value) { return Push(Op::kLeaf, std::move(value)); }

Var Tape::MatMul(Var a, Var b) {
  const Matrix& va = value(a);
  const Matrix& vb = value(b);
  if (va.cols() != vb.rows()) throw std::invalid_argument("MatMul: inner dims differ");
  return Push(Op::kMatMul, va * vb, a, b);
}

Var Tape::AddRowVector(Var a, Var row) {
  const Matrix& va = value(a);
  const Matrix& vr = value(row);
  if (vr.rows() != 1 || vr.cols() != va.cols()) {
    throw std::invalid_argument("AddRowVector: row must be 1 x cols");
  }
  Matrix out = va;
  out.rowwise() += vr.row(0);
  return Push(Op::kAddRowVector, std::move(out), a, row);
}

Var Tape::Add(Var a, Var b) {
  RequireSameShape(value(a), value(b), "Add");
  return Push(Op::kAdd, value(a) + value(b), a, b);
}

Var Tape::Sub(Var a, Var b) {
  RequireSameShape(value(a), value(b), "Sub");
  return Push(Op::kSub, value(a) - value(b), a, b);
}

Var Tape::Mul(Var a, Var b) {
  RequireSameShape(value(a), value(b), "Mul");
  return Push(Op::kMul, value(a).cwiseProduct(value(b)), a, b);
}

Var Tape::Scale(Var a, double s) { return Push(Op::kScale, value(a) * s, a, {}, s); }

Var Tape::Relu(Var a) { return Push(Op::kRelu, value(a).cwiseMax(0.0), a); }

Var Tape::Sigmoid(Var a) {
  Matrix out = value(a).unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
  return Push(Op::kSigmoid, std::move(out), a);
}

Var Tape::Log(Var a) {
  return Push(Op::kLog, value(a).array().log().matrix(), a);
}

Var Tape::Log1m(Var a) {
  Matrix out = value(a).unaryExpr([](double x) { return std::log1p(-x); });
  return Push(Op::kLog1m, std::move(out), a);
}

Var Tape::Clamp(Var a, double lo, double hi) {
  return Push(Op::kClamp, value(a).cwiseMax(lo).cwiseMin(hi), a, {}, lo, hi);
}

Var Tape::Square(Var a) {
  return Push(Op::kSquare, value(a).cwiseProduct(value(a)), a);
}

Var Tape::Sum(Var a) {
  Matrix out(1, 1);
  out(0, 0) = value(a).sum();
  return Push(Op::kSum, std::move(out), a);
}

Var Tape::Mean(Var a) {
  const Matrix& va = value(a);
  if (va.size() == 0) throw std::invalid_argument("Mean of empty matrix");
  Matrix out(1, 1);
  out(0, 0) = va.sum() / static_cast<double>(va.size());
  return Push(Op::kMean, std::move(out), a);
}

double Tape::scalar(Var v) const {
  const Matrix& m = value(v);
  if (m.size() != 1) throw std::invalid_argument("scalar() on a non-1x1 node");
  return m(0, 0);
}

const Matrix& Tape::grad(Var v) const {
  const Node& node = nodes_[Index(v)];
  if (node.grad.size() == 0 && node.value.size() != 0) {
    static thread_local Matrix zeros;
    zeros = Matrix::Zero(node.value.rows(), node.value.cols());
    return zeros;
  }
  return node.grad;
}

void Tape::Backward(Var output, double seed) {
  const std::size_t out = Index(output);
  if (nodes_[out].value.size() != 1) {
    throw std::invalid_argument("Backward needs a 1 x 1 output");
  }
  for (Node& node : nodes_) {
    node.grad.resize(0, 0);
  }
  for (std::size_t i = 0; i <= out; ++i) {
    if (nodes_[i].needs_grad) {
      nodes_[i].grad = Matrix::Zero(nodes_[i].value.rows(), nodes_[i].value.cols());
    }
  }
  if (!nodes_[out].needs_grad) return;
  nodes_[out].grad(0, 0) = seed;

  auto wants = [&](std::int32_t id) { return id >= 0 && nodes_[id].needs_grad; };

  for (std::size_t idx = out + 1; idx-- > 0;) {
    Node& node = nodes_[idx];
    if (!node.needs_grad) continue;
    const Matrix& g = node.grad;
    switch (node.op) {
      case Op::kConstant:
      case Op::kLeaf:
        break;
      case Op::kMatMul:
        if (wants(node.a)) nodes_[node.a].grad.noalias() += g * nodes_[node.b].value.transpose();
        if (wants(node.b)) nodes_[node.b].grad.noalias() += nodes_[node.a].value.transpose() * g;
        break;
      case Op::kAddRowVector:
        if (wants(node.a)) nodes_[node.a].grad += g;
        if (wants(node.b)) nodes_[node.b].grad += g.colwise().sum();
        break;
      case Op::kAdd:
        if (wants(node.a)) nodes_[node.a].grad += g;
        if (wants(node.b)) nodes_[node.b].grad += g;
        break;
      case Op::kSub:
        if (wants(node.a)) nodes_[node.a].grad += g;
        if (wants(node.b)) nodes_[node.b].grad -= g;
        break;
      case Op::kMul:
        if (wants(node.a)) nodes_[node.a].grad += g.cwiseProduct(nodes_[node.b].value);
        if (wants(node.b)) nodes_[node.b].grad += g.cwiseProduct(nodes_[node.a].value);
        break;
      case Op::kScale:
        nodes_[node.a].grad += g * node.p0;
        break;
      case Op::kRelu: {
        const Matrix& x = nodes_[node.a].value;
        nodes_[node.a].grad += g.cwiseProduct(
            x.unaryExpr([](double v) { return v > 0.0 ? 1.0 : 0.0; }));
        break;
      }
      case Op::kSigmoid: {
        const Matrix& s = node.value;
        nodes_[node.a].grad += g.cwiseProduct(
            s.unaryExpr([](double v) { return v * (1.0 - v); }));
        break;
      }
      case Op::kLog:
        nodes_[node.a].grad += g.cwiseQuotient(nodes_[node.a].value);
        break;
      case Op::kLog1m:
        nodes_[node.a].grad -= g.cwiseQuotient(
            nodes_[node.a].value.unaryExpr([](double v) { return 1.0 - v; }));
        break;
      case Op::kClamp: {
        const double lo = node.p0;
        const double hi = node.p1;
        nodes_[node.a].grad += g.cwiseProduct(nodes_[node.a].value.unaryExpr(
            [lo, hi](double v) { return (v >= lo && v <= hi) ? 1.0 : 0.0; }));
        break;
      }
      case Op::kSquare:
        nodes_[node.a].grad += 2.0 * g.cwiseProduct(nodes_[node.a].value);
        break;
      case Op::kSum:
        nodes_[node.a].grad.array() += g(0, 0);
        break;
      case Op::kMean: {
        const double n = static_cast<double>(nodes_[node.a].value.size());
        nodes_[node.a].grad.array() += g(0, 0) / n;
        break;
      }
    }
  }
}

}  // namespace minimax::neural
