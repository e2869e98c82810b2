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

#include "bornsim/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

#include "bornsim/errors.hpp"

namespace bornsim {
namespace {

using nlohmann::json;

std::string to_chars_string(double value, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto result =
      precision < 0 ? std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt)
                    : std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt,
                                    precision);
  return std::string(buf.data(), result.ptr);
}

void write_canonical(const json& value, std::string& out) {
  switch (value.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      // nlohmann::json stores objects in a std::map, so items are key-sorted.
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        write_canonical(item, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ',';
        write_canonical(value[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double d = value.get<double>();
      out += std::isfinite(d) ? format_sig17(d) : "null";
      break;
    }
    default:
      out += value.dump();
  }
}

json test_to_json(const TestReport& t) {
  json out;
  out["name"] = t.name;
  out["statistic"] = t.statistic;
  out["dof"] = t.dof;
  out["sample_size"] = t.sample_size;
  out["p_value"] = t.p_value ? json(*t.p_value) : json(nullptr);
  out["alpha"] = t.alpha ? json(*t.alpha) : json(nullptr);
  out["tolerance"] = t.tolerance ? json(*t.tolerance) : json(nullptr);
  out["passed"] = t.passed;
  out["warnings"] = t.warnings;
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("write failed", path.string());
}

}  // namespace

std::string format_sig17(double value) {
  return to_chars_string(value, std::chars_format::general, 17);
}

std::string format_shortest(double value) {
  std::string s = to_chars_string(value, std::chars_format::general, -1);
  if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string canonical_json(const json& value) {
  std::string out;
  write_canonical(value, out);
  return out;
}

json report_to_json(const RunReport& r) {
  json out;
  json echo = scenario_to_json(r.scenario);
  // Parallelism does not change results, so it is not part of the record.
  echo.erase("workers");
  out["scenario"] = echo;

  json resolved = json::array();
  for (const Complex& c : r.resolved.amplitudes()) resolved.push_back({c.real(), c.imag()});
  out["resolved_state"] = resolved;

  json outcomes = json::array();
  for (const OutcomeRow& row : r.outcomes) {
    outcomes.push_back({{"n", row.n},
                        {"A", row.modulus},
                        {"born", row.born},
                        {"empirical", row.empirical},
                        {"quadrature", row.quadrature ? json(*row.quadrature)
                                                      : json(nullptr)},
                        {"count", r.histogram.at(row.n)}});
  }
  out["outcomes"] = outcomes;

  json tests = json::array();
  for (const TestReport& t : r.tests) tests.push_back(test_to_json(t));
  out["tests"] = tests;

  out["passed"] = r.passed();
  out["proposals_used"] = r.proposals_used;
  out["warnings"] = r.warnings;
  out["rng"] = r.rng_algorithm;
  out["tool_version"] = r.tool_version;
  return out;
}

std::string report_json(const RunReport& report) {
  return canonical_json(report_to_json(report)) + "\n";
}

std::string outcome_csv(const RunReport& r) {
  std::string out = "n,A,born,empirical,quadrature\n";
  for (const OutcomeRow& row : r.outcomes) {
    out += std::to_string(row.n);
    out += ',' + format_shortest(row.modulus);
    out += ',' + format_shortest(row.born);
    out += ',' + format_shortest(row.empirical);
    out += ',';
    if (row.quadrature) out += format_shortest(*row.quadrature);
    out += '\n';
  }
  return out;
}

std::string histogram_csv(const RunReport& r) {
  std::string out = "n,count\n";
  for (std::size_t n = 0; n < r.histogram.size(); ++n) {
    out += std::to_string(n) + ',' + std::to_string(r.histogram[n]) + '\n';
  }
  return out;
}

std::filesystem::path histogram_path_for(const std::filesystem::path& csv_path) {
  std::filesystem::path out = csv_path;
  out.replace_filename(csv_path.stem().string() + "_hist" +
                       csv_path.extension().string());
  return out;
}

void emit_report(const RunReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  switch (format) {
    case ReportFormat::kJson:
      write_file(path, report_json(report));
      break;
    case ReportFormat::kCsv:
      write_file(path, outcome_csv(report));
      write_file(histogram_path_for(path), histogram_csv(report));
      break;
  }
}

}  // namespace bornsim
