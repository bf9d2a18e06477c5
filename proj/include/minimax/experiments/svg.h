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

#ifndef MINIMAX_EXPERIMENTS_SVG_H_
#define MINIMAX_EXPERIMENTS_SVG_H_

#include <string>
#include <vector>

namespace minimax::experiments {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  // Points instead of polylines.
  bool scatter = false;
  // Equal units on both axes.
  bool square = false;
};

// Self-contained SVG document. Non-finite points are skipped.
std::string RenderSvg(const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace minimax::experiments

#endif  // MINIMAX_EXPERIMENTS_SVG_H_
