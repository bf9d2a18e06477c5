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

#ifndef MINIMAX_EXPERIMENTS_CRITERIA_H_
#define MINIMAX_EXPERIMENTS_CRITERIA_H_

#include <string>
#include <string_view>
#include <vector>

namespace minimax::experiments {

enum class Comparison {
  kWithin,    // |observed - expected| <= tolerance
  kAtMost,    // observed <= expected + tolerance
  kBelow,     // observed < expected + tolerance
  kAtLeast,   // observed >= expected - tolerance
  kEquals,    // observed == expected
  kRecorded,  // reported, never fails
};

std::string_view ComparisonName(Comparison c);
Comparison ComparisonFromName(std::string_view name);

struct Criterion {
  std::string id;
  std::string description;
  double expected = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::kAtMost;
  // Observed values are 0/1 and serialized as JSON booleans.
  bool boolean = false;
};

// Every threshold checked by the experiments and the acceptance suite.
const std::vector<Criterion>& Criteria();
// Throws std::invalid_argument for an unknown id.
const Criterion& FindCriterion(std::string_view id);

struct CheckResult {
  std::string id;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::kAtMost;
  bool boolean = false;
  bool pass = false;
};

bool Passes(const Criterion& criterion, double observed);
CheckResult Check(std::string_view id, double observed);

}  // namespace minimax::experiments

#endif  // MINIMAX_EXPERIMENTS_CRITERIA_H_
