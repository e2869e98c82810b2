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

#include "bornsim/runner.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "bornsim/errors.hpp"
#include "bornsim/report.hpp"
#include "support/random_states.hpp"

namespace bornsim {
namespace {

Scenario make(std::vector<Complex> state, std::uint64_t samples,
              std::vector<Check> checks, std::uint64_t seed = 42) {
  Scenario s;
  s.name = "test";
  s.state = std::move(state);
  s.samples = samples;
  s.seed = seed;
  s.checks = std::move(checks);
  return s;
}

const TestReport* find_test(const RunReport& r, const std::string& name) {
  for (const TestReport& t : r.tests) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

TEST(RunScenario, Certainty) {
  const RunReport r = run_scenario(make({{1.0, 0.0}}, 10, {Check::kBorn}));
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_EQ(r.outcomes[0].empirical, 1.0);
  EXPECT_EQ(r.outcomes[0].born, 1.0);
  EXPECT_FALSE(r.outcomes[0].quadrature.has_value());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.histogram, std::vector<std::uint64_t>{10});
}

TEST(RunScenario, CompositeSymmetricPairs) {
  Scenario s = make({}, 20'000, {Check::kBorn, Check::kQuadrature});
  s.state.reset();
  s.composite = CompositeState{{{1.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {1.0, 0.0}}};
  const RunReport r = run_scenario(s);
  ASSERT_EQ(r.outcomes.size(), 4u);
  for (const OutcomeRow& row : r.outcomes) {
    EXPECT_NEAR(row.born, 0.25, 1e-15);
    EXPECT_EQ(*row.quadrature, 0.25);
  }
  EXPECT_TRUE(r.passed());
  // Raw factors have squared norm 2.
  EXPECT_EQ(r.warnings.size(), 2u);
}

TEST(RunScenario, CompositeMatchesPreTensoredState) {
  std::mt19937_64 gen(2);
  const StateVector particle = normalize(testing::random_amplitudes(gen, 2));
  const StateVector apparatus = normalize(testing::random_amplitudes(gen, 3));
  const StateVector joint = tensor(particle, apparatus);

  Scenario composite = make({}, 50'000, {Check::kBorn, Check::kCutoff,
                                         Check::kDiskUniformity, Check::kQuadrature});
  composite.state.reset();
  composite.composite = CompositeState{
      {particle.amplitudes().begin(), particle.amplitudes().end()},
      {apparatus.amplitudes().begin(), apparatus.amplitudes().end()}};
  Scenario single = composite;
  single.composite.reset();
  single.state = std::vector<Complex>(joint.amplitudes().begin(), joint.amplitudes().end());

  nlohmann::json a = report_to_json(run_scenario(composite));
  nlohmann::json b = report_to_json(run_scenario(single));
  a.erase("scenario");
  b.erase("scenario");
  EXPECT_EQ(canonical_json(a), canonical_json(b));
}

TEST(RunScenario, ThreeOutcomeAllChecks) {
  Scenario s = make({{0.6, 0.0}, {0.0, 0.48}, {0.64, 0.0}}, 1'000'000,
                    {Check::kBorn, Check::kCutoff, Check::kInitialUniformity,
                     Check::kDiskUniformity, Check::kQuadrature});
  const RunReport r = run_scenario(s);
  const double born[] = {0.36, 0.2304, 0.4096};
  for (std::size_t n = 0; n < 3; ++n) {
    EXPECT_NEAR(r.outcomes[n].born, born[n], 1e-15);
    // Binomial 4 sigma band on each count.
    const double mean = 1e6 * born[n];
    const double sd = std::sqrt(1e6 * born[n] * (1.0 - born[n]));
    EXPECT_NEAR(static_cast<double>(r.histogram[n]), mean, 4.0 * sd);
  }
  for (const TestReport& t : r.tests) EXPECT_TRUE(t.passed) << t.name;
  EXPECT_TRUE(r.passed());
  ASSERT_NE(find_test(r, "cutoff_closed_form"), nullptr);
  ASSERT_NE(find_test(r, "cutoff_homogeneity"), nullptr);
  ASSERT_NE(find_test(r, "initial_r0_squared"), nullptr);
  ASSERT_NE(find_test(r, "disk_angle_n2"), nullptr);
  EXPECT_EQ(r.tests.size(), 1u + 2u + 2u + 6u + 1u);
}

TEST(RunScenario, ZeroAmplitudeOutcomeSkippedInDiskChecks) {
  const RunReport r = run_scenario(
      make({{1.0, 0.0}, {0.0, 0.0}}, 5000,
           {Check::kBorn, Check::kInitialUniformity, Check::kDiskUniformity}));
  EXPECT_EQ(r.histogram[1], 0u);
  EXPECT_EQ(find_test(r, "disk_radial_n1"), nullptr);
  EXPECT_NE(find_test(r, "disk_radial_n0"), nullptr);
  EXPECT_EQ(find_test(r, "born")->dof, 0);
  EXPECT_TRUE(r.passed());
}

TEST(RunScenario, CutoffScalesTheSecondRun) {
  Scenario s = make({{0.6, 0.0}, {0.0, 0.8}}, 20'000, {Check::kCutoff});
  s.cutoff = 3.0;
  const RunReport r = run_scenario(s);
  const TestReport* closed = find_test(r, "cutoff_closed_form");
  ASSERT_NE(closed, nullptr);
  EXPECT_LE(closed->statistic, 1e-12);
  EXPECT_EQ(*closed->tolerance, kCutoffClosedFormTolerance);
  EXPECT_TRUE(r.passed());
}

TEST(RunScenario, CoarseGridToleranceScales) {
  Scenario s = make({{0.6, 0.0}, {0.0, 0.8}}, 100, {Check::kQuadrature});
  s.grid = 1024;
  const RunReport r = run_scenario(s);
  EXPECT_DOUBLE_EQ(*find_test(r, "quadrature")->tolerance, 8e-3);
}

TEST(RunScenario, WarnsOnUnnormalizedInput) {
  EXPECT_EQ(run_scenario(make({{3.0, 0.0}, {0.0, 4.0}}, 10, {})).warnings.size(), 1u);
  EXPECT_TRUE(run_scenario(make({{0.6, 0.0}, {0.0, 0.8}}, 10, {})).warnings.empty());
}

TEST(RunScenario, WorkerCountDoesNotChangeReport) {
  Scenario s = make({{0.6, 0.0}, {0.0, 0.48}, {0.64, 0.0}}, 30'000,
                    {Check::kBorn, Check::kCutoff, Check::kInitialUniformity,
                     Check::kDiskUniformity, Check::kQuadrature});
  const std::string one = report_json(run_scenario(s));
  for (unsigned workers : {2u, 4u}) {
    s.workers = workers;
    EXPECT_EQ(report_json(run_scenario(s)), one);
  }
}

TEST(RunScenario, Errors) {
  EXPECT_THROW(run_scenario(make({{0.0, 0.0}}, 10, {})), ZeroStateError);
  EXPECT_THROW(run_scenario(make({{1.0, 0.0}}, 0, {})), ConfigError);
  Scenario none = make({{1.0, 0.0}}, 10, {});
  none.state.reset();
  EXPECT_THROW(run_scenario(none), ConfigError);
}

}  // namespace
}  // namespace bornsim
