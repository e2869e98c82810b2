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

#include "bornsim/scenario.hpp"

#include <gtest/gtest.h>

#include "bornsim/errors.hpp"

namespace bornsim {
namespace {

std::string error_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseScenario, MinimalWithDefaults) {
  const Scenario s = parse_scenario(R"({"name": "x", "state": [[1, 0]], "samples": 10})");
  EXPECT_EQ(s.name, "x");
  ASSERT_TRUE(s.state.has_value());
  EXPECT_EQ(s.state->at(0), Complex(1.0, 0.0));
  EXPECT_FALSE(s.composite.has_value());
  EXPECT_EQ(s.cutoff, 1.0);
  EXPECT_EQ(s.samples, 10u);
  EXPECT_EQ(s.seed, 0u);
  EXPECT_EQ(s.workers, 1u);
  EXPECT_EQ(s.alpha, 0.001);
  EXPECT_EQ(s.grid, 4096u);
  EXPECT_EQ(s.checks, (std::vector<Check>{Check::kBorn, Check::kQuadrature}));
}

TEST(ParseScenario, FullDocument) {
  const Scenario s = parse_scenario(R"({
    "name": "full",
    "composite": {"particle": [[1, 0], [0, 1]], "apparatus": [[0.5, 0.5]]},
    "R": 2.5, "samples": 1e6, "seed": 18446744073709551615, "workers": 4,
    "alpha": 0.01, "grid": 512,
    "checks": ["quadrature", "born", "cutoff", "born"]
  })");
  ASSERT_TRUE(s.composite.has_value());
  EXPECT_EQ(s.composite->particle.size(), 2u);
  EXPECT_EQ(s.composite->apparatus.at(0), Complex(0.5, 0.5));
  EXPECT_EQ(s.cutoff, 2.5);
  EXPECT_EQ(s.samples, 1'000'000u);
  EXPECT_EQ(s.seed, 18446744073709551615ull);
  EXPECT_EQ(s.workers, 4u);
  EXPECT_EQ(s.grid, 512u);
  EXPECT_EQ(s.checks,
            (std::vector<Check>{Check::kBorn, Check::kCutoff, Check::kQuadrature}));
}

TEST(ParseScenario, AllChecks) {
  const Scenario s = parse_scenario(
      R"({"name": "x", "state": [[1, 0]], "samples": 1, "checks": "all"})");
  EXPECT_EQ(s.checks.size(), 5u);
  EXPECT_TRUE(s.has_check(Check::kDiskUniformity));
}

TEST(ParseScenario, SyntaxErrorReportsLine) {
  const std::string msg = error_of("{\n  \"name\": \"x\",\n  \"samples\": 10,,\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(ParseScenario, FieldErrorsNameTheField) {
  EXPECT_NE(error_of(R"({"state": [[1, 0]], "samples": 1})").find("'name'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": -5})")
                .find("'samples'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": 0})")
                .find("'samples'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]]})").find("'samples'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0, 2]], "samples": 1})")
                .find("'state[0]'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, "a"]], "samples": 1})")
                .find("'state[0][1]'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": 1, "R": 0})")
                .find("'R'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": 1, "alpha": 1.5})")
                .find("'alpha'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": 1, "grid": 32})")
                .find("'grid'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": 1, "checks": ["nope"]})")
                .find("'checks[0]'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": 1.5})")
                .find("'samples'"),
            std::string::npos);
}

TEST(ParseScenario, ExactlyOneStateSource) {
  EXPECT_FALSE(error_of(R"({"name": "x", "samples": 1})").empty());
  EXPECT_FALSE(error_of(R"({"name": "x", "samples": 1, "state": [[1, 0]],
      "composite": {"particle": [[1, 0]], "apparatus": [[1, 0]]}})")
                   .empty());
  EXPECT_FALSE(error_of(R"({"name": "x", "samples": 1,
      "composite": {"particle": [[1, 0]]}})")
                   .empty());
}

TEST(ParseScenario, RejectsUnknownFieldsAndNonObjects) {
  EXPECT_NE(error_of(R"({"name": "x", "state": [[1, 0]], "samples": 1, "sample": 2})")
                .find("'sample'"),
            std::string::npos);
  EXPECT_FALSE(error_of("[1, 2]").empty());
}

TEST(ScenarioJson, RoundTrips) {
  const Scenario s = parse_scenario(R"({
    "name": "rt", "composite": {"particle": [[0.1, -0.2]], "apparatus": [[3, 4]]},
    "R": 0.3, "samples": 99, "seed": 5, "workers": 2, "alpha": 0.05, "grid": 128,
    "checks": ["cutoff"]})");
  EXPECT_EQ(parse_scenario(scenario_to_json(s).dump()), s);
}

TEST(LoadScenario, MissingFileIsIoError) {
  EXPECT_THROW(load_scenario("/nonexistent/scenario.json"), IoError);
}

TEST(LoadScenario, ReadsFile) {
  const Scenario s = load_scenario(std::string(BORNSIM_TEST_DATA_DIR) + "/certainty.json");
  EXPECT_EQ(s.name, "certainty");
  EXPECT_EQ(s.checks, std::vector<Check>{Check::kBorn});
}

}  // namespace
}  // namespace bornsim
