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

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "bornsim/errors.hpp"

namespace bornsim {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Check, std::string_view>, 5> kCheckNames{{
    {Check::kBorn, "born"},
    {Check::kCutoff, "cutoff"},
    {Check::kInitialUniformity, "initial_uniformity"},
    {Check::kDiskUniformity, "disk_uniformity"},
    {Check::kQuadrature, "quadrature"},
}};

const std::set<std::string, std::less<>> kKnownKeys = {
    "name", "state", "composite", "R", "samples", "seed",
    "workers", "alpha", "grid", "checks"};

[[noreturn]] void field_error(std::string_view field, std::string_view what) {
  throw ConfigError("field '" + std::string(field) + "': " + std::string(what));
}

std::uint64_t get_uint(const json& value, std::string_view field,
                       std::uint64_t min, std::uint64_t max) {
  std::uint64_t out = 0;
  if (value.is_number_unsigned()) {
    out = value.get<std::uint64_t>();
  } else if (value.is_number_integer()) {
    field_error(field, "must be non-negative");
  } else if (value.is_number_float()) {
    // Accept 1e6 style literals as long as they are exact integers.
    const double d = value.get<double>();
    if (!(d >= 0.0) || d != std::floor(d) || d >= 0x1.0p64) {
      field_error(field, "must be a non-negative integer");
    }
    out = static_cast<std::uint64_t>(d);
  } else {
    field_error(field, "must be an integer");
  }
  if (out < min || out > max) {
    field_error(field, "must lie in [" + std::to_string(min) + ", " +
                           std::to_string(max) + "], got " + std::to_string(out));
  }
  return out;
}

double get_real(const json& value, std::string_view field) {
  if (!value.is_number()) field_error(field, "must be a number");
  const double d = value.get<double>();
  if (!std::isfinite(d)) field_error(field, "must be finite");
  return d;
}

std::vector<Complex> get_amplitudes(const json& value, std::string_view field) {
  if (!value.is_array() || value.empty()) {
    field_error(field, "must be a non-empty array of [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(value.size());
  for (std::size_t j = 0; j < value.size(); ++j) {
    const json& entry = value[j];
    const std::string where = std::string(field) + "[" + std::to_string(j) + "]";
    if (!entry.is_array() || entry.size() != 2) {
      field_error(where, "must be an [re, im] pair");
    }
    out.emplace_back(get_real(entry[0], where + "[0]"),
                     get_real(entry[1], where + "[1]"));
  }
  return out;
}

json amplitudes_to_json(std::span<const Complex> amps) {
  json out = json::array();
  for (const Complex& c : amps) out.push_back({c.real(), c.imag()});
  return out;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text,
                                                    std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::string_view check_name(Check check) noexcept {
  for (const auto& [c, name] : kCheckNames) {
    if (c == check) return name;
  }
  return "unknown";
}

std::optional<Check> parse_check(std::string_view name) noexcept {
  for (const auto& [c, n] : kCheckNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

bool Scenario::has_check(Check c) const noexcept {
  return std::find(checks.begin(), checks.end(), c) != checks.end();
}

void validate_scenario(const Scenario& s) {
  if (s.state.has_value() == s.composite.has_value()) {
    field_error("state", "exactly one of 'state' and 'composite' is required");
  }
  if (!(s.cutoff > 0.0) || !std::isfinite(s.cutoff)) {
    field_error("R", "must be positive and finite");
  }
  if (s.samples < 1) field_error("samples", "must be at least 1");
  if (s.workers < 1) field_error("workers", "must be at least 1");
  if (!(s.alpha > 0.0 && s.alpha < 1.0)) field_error("alpha", "must lie in (0, 1)");
  if (s.grid < 64) field_error("grid", "must be at least 64");
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    throw ConfigError("scenario is not valid JSON at line " +
                      std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("scenario must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!kKnownKeys.contains(key)) field_error(key, "unknown field");
  }

  Scenario s;
  if (!doc.contains("name") || !doc["name"].is_string()) {
    field_error("name", "required string");
  }
  s.name = doc["name"].get<std::string>();
  if (doc.contains("state")) s.state = get_amplitudes(doc["state"], "state");
  if (doc.contains("composite")) {
    const json& c = doc["composite"];
    if (!c.is_object() || c.size() != 2 || !c.contains("particle") ||
        !c.contains("apparatus")) {
      field_error("composite", "must be an object with exactly 'particle' and "
                               "'apparatus'");
    }
    s.composite = CompositeState{
        get_amplitudes(c["particle"], "composite.particle"),
        get_amplitudes(c["apparatus"], "composite.apparatus")};
  }
  if (doc.contains("R")) s.cutoff = get_real(doc["R"], "R");
  if (!doc.contains("samples")) field_error("samples", "required");
  s.samples = get_uint(doc["samples"], "samples", 1,
                       std::numeric_limits<std::uint64_t>::max());
  if (doc.contains("seed")) {
    s.seed = get_uint(doc["seed"], "seed", 0,
                      std::numeric_limits<std::uint64_t>::max());
  }
  if (doc.contains("workers")) {
    s.workers = static_cast<unsigned>(get_uint(doc["workers"], "workers", 1, 1024));
  }
  if (doc.contains("alpha")) s.alpha = get_real(doc["alpha"], "alpha");
  if (doc.contains("grid")) {
    s.grid = static_cast<std::uint32_t>(get_uint(doc["grid"], "grid", 64, 1u << 20));
  }
  if (doc.contains("checks")) {
    const json& checks = doc["checks"];
    s.checks.clear();
    if (checks.is_string() && checks.get<std::string>() == "all") {
      for (const auto& [c, _] : kCheckNames) s.checks.push_back(c);
    } else if (checks.is_array()) {
      for (std::size_t i = 0; i < checks.size(); ++i) {
        const std::string where = "checks[" + std::to_string(i) + "]";
        if (!checks[i].is_string()) field_error(where, "must be a string");
        const auto c = parse_check(checks[i].get<std::string>());
        if (!c) field_error(where, "unknown check '" + checks[i].get<std::string>() + "'");
        s.checks.push_back(*c);
      }
      std::sort(s.checks.begin(), s.checks.end());
      s.checks.erase(std::unique(s.checks.begin(), s.checks.end()), s.checks.end());
    } else {
      field_error("checks", "must be \"all\" or an array of check names");
    }
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read scenario", path.string());
  return parse_scenario(buffer.str());
}

nlohmann::json scenario_to_json(const Scenario& s) {
  json out;
  out["name"] = s.name;
  if (s.state) out["state"] = amplitudes_to_json(*s.state);
  if (s.composite) {
    out["composite"] = {{"particle", amplitudes_to_json(s.composite->particle)},
                        {"apparatus", amplitudes_to_json(s.composite->apparatus)}};
  }
  out["R"] = s.cutoff;
  out["samples"] = s.samples;
  out["seed"] = s.seed;
  out["workers"] = s.workers;
  out["alpha"] = s.alpha;
  out["grid"] = s.grid;
  json checks = json::array();
  for (Check c : s.checks) checks.push_back(std::string(check_name(c)));
  out["checks"] = checks;
  return out;
}

}  // namespace bornsim
