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

// Serialization of run reports: canonical JSON plus plot-ready CSV tables.

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "bornsim/runner.hpp"

namespace bornsim {

enum class ReportFormat { kJson, kCsv };

// Locale-independent number formatting.
std::string format_sig17(double value);   // "%.17g"
std::string format_shortest(double value);  // shortest round trip, ".0" kept

// Writes `value` with sorted object keys, no whitespace, and every floating
// point number at 17 significant digits. Non-finite numbers become null.
std::string canonical_json(const nlohmann::json& value);

nlohmann::json report_to_json(const RunReport& report);
std::string report_json(const RunReport& report);  // canonical, '\n' terminated

// Header `n,A,born,empirical,quadrature`; the quadrature field is empty when
// the check did not run.
std::string outcome_csv(const RunReport& report);
// Header `n,count`.
std::string histogram_csv(const RunReport& report);

// kJson writes report_json(report) to path. kCsv writes outcome_csv to path
// and histogram_csv to histogram_path_for(path). Throws IoError.
void emit_report(const RunReport& report, ReportFormat format,
                 const std::filesystem::path& path);

// table.csv -> table_hist.csv
std::filesystem::path histogram_path_for(const std::filesystem::path& csv_path);

}  // namespace bornsim
