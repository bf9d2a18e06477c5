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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

int Cli(const std::string& args) {
  const std::string cmd = std::string(MINIMAX_LAB_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("minimax_lab_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(CliTest, ListAndHelp) {
  EXPECT_EQ(Cli("list"), 0);
  EXPECT_EQ(Cli("--help"), 0);
  EXPECT_EQ(Cli(""), 2);
  EXPECT_EQ(Cli("frobnicate"), 2);
}

TEST(CliTest, PassingRunExitsZero) {
  const fs::path out = Scratch("gda");
  EXPECT_EQ(Cli("run example2-gda --out " + out.string()), 0);
  EXPECT_TRUE(fs::exists(out / "summary.json"));
  EXPECT_TRUE(fs::exists(out / "gda_trace.csv"));
  EXPECT_EQ(Cli("verify --out " + out.string()), 0);
  fs::remove_all(out);
}

TEST(CliTest, FailingChecksExitOne) {
  const fs::path out = Scratch("short");
  const fs::path cfg = fs::temp_directory_path() / "minimax_lab_cli_short.json";
  std::ofstream(cfg) << R"({"iters": 100})";
  EXPECT_EQ(Cli("run example2-gda --config " + cfg.string() + " --out " + out.string()), 1);
  EXPECT_EQ(Cli("verify --out " + out.string()), 1);
  fs::remove_all(out);
  fs::remove(cfg);
}

TEST(CliTest, MalformedConfigLeavesNoOutputs) {
  const fs::path out = Scratch("bad");
  const fs::path cfg = fs::temp_directory_path() / "minimax_lab_cli_bad.json";
  std::ofstream(cfg) << R"({"iters": -3})";
  EXPECT_EQ(Cli("run example2-gda --config " + cfg.string() + " --out " + out.string()), 2);
  EXPECT_FALSE(fs::exists(out));
  std::ofstream(cfg) << R"({"experiment": "fgan-table", "params": {}})";
  EXPECT_EQ(Cli("run example2-gda --config " + cfg.string() + " --out " + out.string()), 2);
  EXPECT_FALSE(fs::exists(out));
  fs::remove(cfg);
}

TEST(CliTest, ErrorClassesHaveDistinctCodes) {
  EXPECT_EQ(Cli("run no-such-experiment"), 2);
  EXPECT_EQ(Cli("run example1-br --config /nonexistent/cfg.json"), 3);
  EXPECT_EQ(Cli("verify --out /nonexistent/dir"), 3);
  const fs::path blocker = Scratch("blocker");
  std::ofstream(blocker) << "file";
  EXPECT_EQ(Cli("run example1-br --out " + (blocker / "sub").string()), 3);
  fs::remove(blocker);
  const fs::path cfg = fs::temp_directory_path() / "minimax_lab_cli_blowup.json";
  std::ofstream(cfg) << R"({"iters": 3, "seeds": 1, "checks": false, "g_lr": 1e306,
                           "eval_samples": 10})";
  const fs::path out = Scratch("blowup");
  EXPECT_EQ(Cli("run gauss8 --config " + cfg.string() + " --out " + out.string()), 4);
  EXPECT_FALSE(fs::exists(out));
  fs::remove(cfg);
}

TEST(CliTest, SeedFlagReachesTheRun) {
  const fs::path a = Scratch("seed_a"), b = Scratch("seed_b");
  ASSERT_EQ(Cli("run fgan-table --seed 3 --out " + a.string()), 0);
  ASSERT_EQ(Cli("run fgan-table --seed 4 --out " + b.string()), 0);
  std::ifstream ra(a / "report.txt"), rb(b / "report.txt");
  std::string la, lb;
  std::getline(ra, la);
  std::getline(ra, la);
  std::getline(rb, lb);
  std::getline(rb, lb);
  EXPECT_NE(la.find("\"seed\":3"), std::string::npos) << la;
  EXPECT_NE(lb.find("\"seed\":4"), std::string::npos) << lb;
  fs::remove_all(a);
  fs::remove_all(b);
}

}  // namespace
