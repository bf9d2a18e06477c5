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

#ifndef MINIMAX_EXPERIMENTS_EXPERIMENTS_H_
#define MINIMAX_EXPERIMENTS_EXPERIMENTS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "minimax/experiments/criteria.h"

namespace minimax::experiments {

struct ExperimentConfig {
  std::string name;
  std::optional<std::uint64_t> seed;
  // Experiment-specific overrides; unknown keys are a ConfigError.
  nlohmann::json params = nlohmann::json::object();
  std::string out_dir = ".";
  bool svg = false;
};

struct Artifact {
  std::string filename;
  std::string content;
};

struct ExperimentResult {
  std::string name;
  std::vector<CheckResult> checks;
  // Resolved parameters after defaults and overrides.
  nlohmann::json params;
  std::vector<Artifact> files;
  std::vector<Artifact> plots;  // SVG, written only on request
  // Experiment-specific lines for report.txt.
  std::vector<std::string> notes;

  bool AllPass() const;
};

// example1-br, example1-fp, example2-gda, example2-fp, gan-discrete,
// fgan-table, gauss8, gauss8-queue-sweep.
const std::vector<std::string>& ExperimentNames();
std::string_view ExperimentDescription(std::string_view name);
bool IsExperiment(std::string_view name);

struct ConfigFile {
  std::optional<std::string> experiment;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  nlohmann::json params = nlohmann::json::object();
};

// Accepts {"experiment", "seed", "out", "params": {...}} with every field
// optional, or a bare parameter object. Throws ConfigError on malformed
// JSON or unknown top-level keys and IoError when the file cannot be read.
ConfigFile LoadConfigFile(const std::string& path);

// Computes everything in memory. Throws ConfigError for an unknown name or
// invalid parameters and NumericalError if training blows up.
ExperimentResult RunExperiment(const ExperimentConfig& config);

// {id: {expected, observed, tolerance, comparison, pass}}.
nlohmann::json SummaryJson(const std::vector<CheckResult>& checks);
std::string RenderReport(const ExperimentResult& result);

// Creates out_dir and writes summary.json, report.txt, every trace and, if
// requested, the plots. Throws IoError.
void WriteArtifacts(const ExperimentResult& result, const std::string& out_dir, bool svg);

// Recomputes pass/fail for every entry of out_dir/summary.json from the
// recorded observation and the registry thresholds. Throws IoError when the
// file is missing and ConfigError when it is malformed or names an unknown
// criterion.
std::vector<CheckResult> VerifySummary(const std::string& out_dir);

// Worker count for fan-out: MINIMAX_LAB_THREADS if set and positive, else
// the hardware concurrency, never more than `jobs`.
int WorkerCount(int jobs);
// Runs fn(0 .. jobs-1) on WorkerCount(jobs) threads. The first exception
// thrown by any job is rethrown after all workers stop.
void ParallelFor(int jobs, const std::function<void(int)>& fn);

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumerical = 4;

}  // namespace minimax::experiments

#endif  // MINIMAX_EXPERIMENTS_EXPERIMENTS_H_
