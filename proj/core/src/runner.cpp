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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bornsim/errors.hpp"
#include "bornsim/model.hpp"
#include "bornsim/philox.hpp"
#include "bornsim/sampler.hpp"
#include "bornsim/version.hpp"

namespace bornsim {
namespace {

constexpr double pi = std::numbers::pi;

// Seed of the second, independent sample drawn at the scaled cutoff.
std::uint64_t derived_seed(std::uint64_t seed) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void warn_if_unnormalized(std::span<const Complex> raw, const std::string& what,
                          std::vector<std::string>* warnings) {
  const double sum = norm_squared(raw);
  if (warnings != nullptr && std::abs(sum - 1.0) > kNormalizationWarnThreshold) {
    warnings->push_back(what + " has squared norm " + std::to_string(sum) +
                        "; renormalized");
  }
}

TestReport named(TestReport report, std::string name) {
  report.name = std::move(name);
  return report;
}

TestReport tolerance_check(std::string name, double statistic, double tolerance) {
  TestReport report;
  report.name = std::move(name);
  report.statistic = statistic;
  report.tolerance = tolerance;
  report.passed = statistic <= tolerance;
  return report;
}

}  // namespace

bool RunReport::passed() const noexcept {
  return std::all_of(tests.begin(), tests.end(),
                     [](const TestReport& t) { return t.passed; });
}

StateVector resolve_state(const Scenario& s, std::vector<std::string>* warnings) {
  if (s.state) {
    warn_if_unnormalized(*s.state, "state", warnings);
    return normalize(*s.state);
  }
  if (!s.composite) throw ConfigError("scenario has neither state nor composite");
  warn_if_unnormalized(s.composite->particle, "composite.particle", warnings);
  warn_if_unnormalized(s.composite->apparatus, "composite.apparatus", warnings);
  const StateVector joint = tensor(normalize(s.composite->particle),
                                   normalize(s.composite->apparatus));
  // Renormalizing the product makes the composite path bit-identical to a
  // plain scenario listing the same joint amplitudes.
  return normalize(joint.amplitudes());
}

RunReport run_scenario(const Scenario& s) {
  const auto start = std::chrono::steady_clock::now();
  validate_scenario(s);

  std::vector<std::string> warnings;
  StateVector state = resolve_state(s, &warnings);
  const ModelConfig model(state, s.cutoff);
  const std::size_t dim = model.dim();
  const SamplerConfig sampler{model, s.seed, s.workers};
  const SampleBatch batch = sample_batch(sampler, s.samples);
  const EmpiricalDistribution emp = marginalize(batch, dim);
  const std::vector<double> born = born_probabilities(state);

  RunReport report{.scenario = s, .resolved = std::move(state)};
  report.histogram = emp.counts;
  report.proposals_used = batch.proposals_used;
  report.warnings = std::move(warnings);
  report.rng_algorithm = std::string(CounterStream::kAlgorithm);
  report.tool_version = std::string(kVersion);
  for (std::size_t n = 0; n < dim; ++n) {
    report.outcomes.push_back({n, amplitude(model.state(), n).modulus(), born[n],
                               emp.frequency(n), std::nullopt});
  }
  const double born_sum = std::accumulate(born.begin(), born.end(), 0.0);
  if (std::abs(born_sum - 1.0) > 1e-9) {
    throw std::logic_error("Born probabilities sum to " + std::to_string(born_sum));
  }

  for (Check check : s.checks) {
    switch (check) {
      case Check::kBorn:
        report.tests.push_back(named(chi_square_gof(emp, born, s.alpha), "born"));
        break;

      case Check::kCutoff: {
        const ModelConfig scaled(model.state(), kCutoffCheckScale * s.cutoff);
        double max_diff = 0.0;
        for (std::size_t n = 0; n < dim; ++n) {
          max_diff = std::max(
              max_diff, std::abs(closed_form_P(model, n) - closed_form_P(scaled, n)));
        }
        report.tests.push_back(tolerance_check("cutoff_closed_form", max_diff,
                                               kCutoffClosedFormTolerance));
        const SampleBatch other = sample_batch(
            SamplerConfig{scaled, derived_seed(s.seed), s.workers}, s.samples);
        report.tests.push_back(
            named(chi_square_homogeneity(emp, marginalize(other, dim), s.alpha),
                  "cutoff_homogeneity"));
        break;
      }

      case Check::kInitialUniformity: {
        const std::vector<InitialLabel> inits = recover_initials(sampler, batch);
        std::vector<double> r0_sq;
        std::vector<double> theta0;
        r0_sq.reserve(inits.size());
        theta0.reserve(inits.size());
        for (const InitialLabel& init : inits) {
          r0_sq.push_back(init.x0 * init.x0 + init.y0 * init.y0);
          theta0.push_back(init.theta0());
        }
        const double R = s.cutoff;
        report.tests.push_back(named(ks_uniformity(r0_sq, 0.0, R * R, s.alpha),
                                     "initial_r0_squared"));
        report.tests.push_back(
            named(ks_uniformity(theta0, -pi, pi, s.alpha), "initial_theta0"));
        break;
      }

      case Check::kDiskUniformity: {
        std::vector<std::vector<double>> radial(dim);
        std::vector<std::vector<double>> angle(dim);
        std::vector<double> radius_sq(dim);
        for (std::size_t n = 0; n < dim; ++n) {
          const double rho = disk_radius(model, n);
          radius_sq[n] = rho * rho;
        }
        for (const FinalLabel& label : batch.labels) {
          if (radius_sq[label.n] == 0.0) continue;
          radial[label.n].push_back((label.x * label.x + label.y * label.y) /
                                    radius_sq[label.n]);
          angle[label.n].push_back(label.theta());
        }
        for (std::size_t n = 0; n < dim; ++n) {
          if (radial[n].empty()) continue;
          const std::string suffix = "_n" + std::to_string(n);
          report.tests.push_back(named(ks_uniformity(radial[n], 0.0, 1.0, s.alpha),
                                       "disk_radial" + suffix));
          report.tests.push_back(named(ks_uniformity(angle[n], -pi, pi, s.alpha),
                                       "disk_angle" + suffix));
        }
        break;
      }

      case Check::kQuadrature: {
        const std::vector<double> quad =
            quadrature_probabilities(model, s.grid, s.workers);
        double max_diff = 0.0;
        for (std::size_t n = 0; n < dim; ++n) {
          report.outcomes[n].quadrature = quad[n];
          max_diff = std::max(max_diff, std::abs(quad[n] - closed_form_P(model, n)));
        }
        const double scale =
            std::max(1.0, static_cast<double>(kQuadratureReferenceGrid) / s.grid);
        report.tests.push_back(
            tolerance_check("quadrature", max_diff, kQuadratureTolerance * scale));
        break;
      }
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bornsim
