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

// Experiment descriptions read from JSON scenario files.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bornsim/hilbert.hpp"

namespace bornsim {

enum class Check { kBorn, kCutoff, kInitialUniformity, kDiskUniformity, kQuadrature };

std::string_view check_name(Check check) noexcept;
std::optional<Check> parse_check(std::string_view name) noexcept;

struct CompositeState {
  std::vector<Complex> particle;
  std::vector<Complex> apparatus;

  friend bool operator==(const CompositeState&, const CompositeState&) = default;
};

struct Scenario {
  std::string name;
  // Exactly one of state / composite is set.
  std::optional<std::vector<Complex>> state;
  std::optional<CompositeState> composite;
  double cutoff = 1.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double alpha = 0.001;
  std::uint32_t grid = 4096;
  // Sorted, unique.
  std::vector<Check> checks = {Check::kBorn, Check::kQuadrature};

  bool has_check(Check c) const noexcept;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Parses and validates a scenario document. Errors are ConfigError with the
// line and column of a syntax error or the name of the offending field.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

// Throws ConfigError if the scenario breaks an invariant (used after CLI
// overrides are applied).
void validate_scenario(const Scenario& scenario);

// Complete scenario with defaults filled in, in the input file format.
nlohmann::json scenario_to_json(const Scenario& scenario);

}  // namespace bornsim
