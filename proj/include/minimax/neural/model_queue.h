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

#ifndef MINIMAX_NEURAL_MODEL_QUEUE_H_
#define MINIMAX_NEURAL_MODEL_QUEUE_H_

#include <cstddef>
#include <deque>
#include <stdexcept>

#include "minimax/neural/mlp.h"

namespace minimax::neural {

// Bounded FIFO. Pushing into a full queue drops the oldest element.
template <typename T>
class BoundedFifo {
 public:
  explicit BoundedFifo(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("queue capacity must be >= 1");
  }

  void Push(T item) {
    if (items_.size() == capacity_) items_.pop_front();
    items_.push_back(std::move(item));
  }

  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return items_.empty(); }

  // Oldest first.
  const T& operator[](std::size_t i) const { return items_.at(i); }
  const T& newest() const { return items_.back(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::size_t capacity_;
  std::deque<T> items_;
};

// Historical parameter snapshots of one network.
using ModelQueue = BoundedFifo<ParamVector>;

}  // namespace minimax::neural

#endif  // MINIMAX_NEURAL_MODEL_QUEUE_H_
