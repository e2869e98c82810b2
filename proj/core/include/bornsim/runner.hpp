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

// End-to-end pipeline: resolve the scenario's state, sample final labels,
// and run the requested checks.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bornsim/hilbert.hpp"
#include "bornsim/scenario.hpp"
#include "bornsim/stats.hpp"

namespace bornsim {

// Raw inputs whose squared norm is further than this from 1 get a warning.
inline constexpr double kNormalizationWarnThreshold = 1e-6;
// Second cutoff of the cutoff-invariance check, as a multiple of R.
inline constexpr double kCutoffCheckScale = 7.3;
// Closed-form probabilities at the two cutoffs must agree this closely.
inline constexpr double kCutoffClosedFormTolerance = 1e-12;
// Quadrature tolerance at grid 4096; scaled by 4096 / grid for coarser grids.
inline constexpr double kQuadratureTolerance = 2e-3;
inline constexpr std::uint32_t kQuadratureReferenceGrid = 4096;

struct OutcomeRow {
  std::size_t n = 0;
  double modulus = 0.0;  // A_n = |<n|psi>|
  double born = 0.0;
  double empirical = 0.0;
  std::optional<double> quadrature;
};

struct RunReport {
  Scenario scenario;
  StateVector resolved;
  std::vector<OutcomeRow> outcomes{};
  std::vector<std::uint64_t> histogram{};
  std::uint64_t proposals_used = 0;
  std::vector<TestReport> tests{};
  // Input normalization warnings and the like.
  std::vector<std::string> warnings{};
  std::string rng_algorithm{};
  std::string tool_version{};
  // Not serialized into the JSON report, which must be reproducible.
  double wall_seconds = 0.0;

  bool passed() const noexcept;
};

// Normalizes the state (tensoring composite factors first) the way
// run_scenario does.
StateVector resolve_state(const Scenario& scenario,
                          std::vector<std::string>* warnings = nullptr);

// Runs every requested check. Deterministic in the scenario apart from
// wall_seconds. Throws ConfigError / ZeroStateError on invalid input.
RunReport run_scenario(const Scenario& scenario);

}  // namespace bornsim
