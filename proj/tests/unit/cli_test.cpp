// Copyright 2026 The bornsim Authors
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

// Drives the bornsim executable and checks its exit-code contract and output.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "bornsim/version.hpp"

#ifdef BORNSIM_CLI_PATH

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result run_cli(const std::string& args) {
  const std::string cmd = std::string(BORNSIM_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(BORNSIM_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() /
         ("bornsim_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, Version) {
  const Result r = run_cli("version");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "bornsim " + std::string(bornsim::kVersion) + "\n");
}

TEST(Cli, ValidateGoodAndBad) {
  EXPECT_EQ(run_cli("validate " + data("certainty.json")).code, 0);
  EXPECT_EQ(run_cli("validate " + data("bad_syntax.json")).code, 2);
  EXPECT_EQ(run_cli("validate " + data("bad_field.json")).code, 2);
  EXPECT_EQ(run_cli("validate " + data("zero_state.json")).code, 2);
  EXPECT_EQ(run_cli("validate /nonexistent.json").code, 2);
}

TEST(Cli, UsageErrorsAreConfigErrors) {
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("run " + data("certainty.json") + " --workers 0").code, 2);
  EXPECT_EQ(run_cli("run " + data("certainty.json") + " --samples 0").code, 2);
}

TEST(Cli, RunPrintsReportAndPasses) {
  const Result r = run_cli("run " + data("certainty.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"passed\":true"), std::string::npos);
}

TEST(Cli, FailedCheckExitsOne) {
  EXPECT_EQ(run_cli("run " + data("strict_alpha.json")).code, 1);
}

TEST(Cli, ZeroStateExitsTwo) {
  EXPECT_EQ(run_cli("run " + data("zero_state.json")).code, 2);
}

TEST(Cli, OverridesAndFilesAreDeterministic) {
  const fs::path a = temp_path("a.json");
  const fs::path b = temp_path("b.json");
  const fs::path csv = temp_path("t.csv");
  const std::string common = "run " + data("composite_bell.json") + " --seed 9 --samples 5000";
  ASSERT_EQ(run_cli(common + " --out " + a.string() + " --csv " + csv.string()).code, 0);
  ASSERT_EQ(run_cli(common + " --workers 3 --out " + b.string()).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("\"seed\":9"), std::string::npos);
  EXPECT_NE(slurp(a).find("\"samples\":5000"), std::string::npos);
  EXPECT_EQ(slurp(csv).rfind("n,A,born,empirical,quadrature\n", 0), 0u);
  const fs::path hist = csv.parent_path() / (csv.stem().string() + "_hist.csv");
  EXPECT_EQ(slurp(hist).rfind("n,count\n0,", 0), 0u);
  for (const auto& p : {a, b, csv, hist}) fs::remove(p);
}

TEST(Cli, GoldenReportFromCommandLine) {
  const Result r = run_cli("run " + data("three_outcome.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(BORNSIM_GOLDEN_DIR) + "/three_outcome.json"));
}

}  // namespace

#endif  // BORNSIM_CLI_PATH
