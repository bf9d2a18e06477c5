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

// minimax_lab run <experiment> [--config path.json] [--seed N] [--out dir] [--svg]
// minimax_lab list
// minimax_lab verify --out dir

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "minimax/errors.h"
#include "minimax/experiments/experiments.h"

namespace mx = minimax::experiments;

namespace {

int Run(const std::string& name, const std::string& config_path,
        std::optional<std::uint64_t> seed, std::optional<std::string> out, bool svg) {
  if (!mx::IsExperiment(name)) throw minimax::ConfigError("unknown experiment '" + name + "'");
  mx::ExperimentConfig cfg;
  cfg.name = name;
  if (!config_path.empty()) {
    mx::ConfigFile file = mx::LoadConfigFile(config_path);
    if (file.experiment && *file.experiment != name) {
      throw minimax::ConfigError(fmt::format("config is for '{}', not '{}'", *file.experiment,
                                             name));
    }
    cfg.params = std::move(file.params);
    cfg.seed = file.seed;
    if (file.out_dir) cfg.out_dir = *file.out_dir;
  }
  if (seed) cfg.seed = seed;
  if (out) cfg.out_dir = *out;
  cfg.svg = svg;

  const mx::ExperimentResult result = mx::RunExperiment(cfg);
  mx::WriteArtifacts(result, cfg.out_dir, cfg.svg);
  std::cout << mx::RenderReport(result);
  return result.AllPass() ? mx::kExitOk : mx::kExitChecksFailed;
}

int Verify(const std::string& out_dir) {
  const auto checks = mx::VerifySummary(out_dir);
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && c.pass;
    std::cout << fmt::format("{}  {}\n", c.pass ? "PASS" : "FAIL", c.id);
  }
  std::cout << (ok ? "summary verified\n" : "summary has failing checks\n");
  return ok ? mx::kExitOk : mx::kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic GAN training experiments"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "run one experiment");
  std::string name, config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  bool svg = false;
  run->add_option("experiment", name, "experiment name (see list)")->required();
  run->add_option("--config", config_path, "JSON parameter file");
  run->add_option("--seed", seed, "master seed");
  run->add_option("--out", out, "output directory (default .)");
  run->add_flag("--svg", svg, "also write SVG plots");

  CLI::App* list = app.add_subcommand("list", "list experiments");

  CLI::App* verify = app.add_subcommand("verify", "re-check an existing summary.json");
  std::string verify_dir;
  verify->add_option("--out", verify_dir, "directory holding summary.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? mx::kExitOk : mx::kExitConfig;
  }

  try {
    if (*list) {
      for (const std::string& n : mx::ExperimentNames()) {
        std::cout << fmt::format("{:<20} {}\n", n, mx::ExperimentDescription(n));
      }
      return mx::kExitOk;
    }
    if (*verify) return Verify(verify_dir);
    return Run(name, config_path, seed, out, svg);
  } catch (const minimax::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return mx::kExitConfig;
  } catch (const minimax::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return mx::kExitIo;
  } catch (const minimax::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return mx::kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mx::kExitNumerical;
  }
}
