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

// bornsim: run measurement-model scenarios and check the outcome statistics.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 configuration error,
// 3 internal error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bornsim/errors.hpp"
#include "bornsim/report.hpp"
#include "bornsim/runner.hpp"
#include "bornsim/scenario.hpp"
#include "bornsim/version.hpp"

namespace {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2, kInternalError = 3 };

struct RunOptions {
  std::string scenario_path;
  std::string out_path;
  std::string csv_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<unsigned> workers;
};

void print_summary(const bornsim::RunReport& report) {
  std::cerr << "scenario '" << report.scenario.name << "': "
            << report.resolved.dim() << " outcomes, " << report.scenario.samples
            << " samples\n";
  for (const std::string& w : report.warnings) std::cerr << "warning: " << w << '\n';
  for (const bornsim::TestReport& t : report.tests) {
    std::cerr << "  " << (t.passed ? "PASS " : "FAIL ") << t.name
              << " statistic=" << bornsim::format_shortest(t.statistic);
    if (t.p_value) std::cerr << " p=" << bornsim::format_shortest(*t.p_value);
    if (t.tolerance) std::cerr << " tol=" << bornsim::format_shortest(*t.tolerance);
    std::cerr << '\n';
    for (const std::string& w : t.warnings) std::cerr << "    warning: " << w << '\n';
  }
  std::cerr << "wall time: " << report.wall_seconds << " s\n";
}

int run(const RunOptions& opts) {
  bornsim::Scenario scenario = bornsim::load_scenario(opts.scenario_path);
  if (opts.seed) scenario.seed = *opts.seed;
  if (opts.samples) scenario.samples = *opts.samples;
  if (opts.workers) scenario.workers = *opts.workers;
  bornsim::validate_scenario(scenario);

  const bornsim::RunReport report = bornsim::run_scenario(scenario);
  if (opts.out_path.empty()) {
    std::cout << bornsim::report_json(report);
  } else {
    bornsim::emit_report(report, bornsim::ReportFormat::kJson, opts.out_path);
  }
  if (!opts.csv_path.empty()) {
    bornsim::emit_report(report, bornsim::ReportFormat::kCsv, opts.csv_path);
  }
  print_summary(report);
  return report.passed() ? kOk : kCheckFailed;
}

int validate(const std::string& path) {
  const bornsim::Scenario scenario = bornsim::load_scenario(path);
  std::vector<std::string> warnings;
  bornsim::resolve_state(scenario, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
  std::cout << path << ": ok\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal a priori probability model of quantum measurement"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a scenario and report the checks");
  run_cmd->add_option("scenario", run_opts.scenario_path, "Scenario JSON file")
      ->required();
  run_cmd->add_option("--out", run_opts.out_path,
                      "Write the JSON report here instead of stdout");
  run_cmd->add_option("--csv", run_opts.csv_path,
                      "Write the per-outcome table here (plus <stem>_hist.csv)");
  run_cmd->add_option("--seed", run_opts.seed, "Override the scenario seed");
  run_cmd->add_option("--samples", run_opts.samples, "Override the sample count")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--workers", run_opts.workers, "Override the worker count")
      ->check(CLI::Range(1u, 1024u));

  std::string validate_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check a scenario file without running it");
  validate_cmd->add_option("scenario", validate_path, "Scenario JSON file")->required();

  app.add_subcommand("version", "Print the tool version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run_cmd) return run(run_opts);
    if (*validate_cmd) return validate(validate_path);
    std::cout << "bornsim " << bornsim::kVersion << '\n';
    return kOk;
  } catch (const bornsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const bornsim::ZeroStateError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const bornsim::InvalidAmplitudeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const bornsim::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
