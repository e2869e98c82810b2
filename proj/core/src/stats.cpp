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

#include "bornsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ranges>
#include <string>
#include <thread>

#include "bornsim/errors.hpp"
#include "bornsim/special_functions.hpp"

namespace bornsim {
namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kRangeSlack = 1e-9;
constexpr double kMinExpectedCount = 5.0;

void finish_statistical(TestReport& report, double alpha) {
  report.alpha = alpha;
  report.passed = *report.p_value >= alpha;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

}  // namespace

EmpiricalDistribution marginalize(std::span<const FinalLabel> labels,
                                  std::size_t dim) {
  if (labels.empty()) throw ConfigError("cannot marginalize an empty batch");
  EmpiricalDistribution emp;
  emp.counts.assign(dim, 0);
  for (const FinalLabel& label : labels) {
    if (label.n >= dim) {
      throw IndexError("label outcome " + std::to_string(label.n) +
                       " out of range for dim " + std::to_string(dim));
    }
    ++emp.counts[label.n];
  }
  emp.total = labels.size();
  return emp;
}

EmpiricalDistribution marginalize(const SampleBatch& batch, std::size_t dim) {
  return marginalize(std::span<const FinalLabel>(batch.labels), dim);
}

TestReport chi_square_gof(const EmpiricalDistribution& emp,
                          std::span<const double> expected, double alpha) {
  check_alpha(alpha);
  if (expected.size() != emp.counts.size()) {
    throw ConfigError("expected has " + std::to_string(expected.size()) +
                      " entries but the distribution has " +
                      std::to_string(emp.counts.size()));
  }
  if (emp.total == 0) throw ConfigError("empirical distribution is empty");
  double sum = 0.0;
  for (double p : expected) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ConfigError("expected probabilities must be finite and non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ConfigError("expected probabilities sum to " + std::to_string(sum));
  }

  TestReport report;
  report.name = "chi_square_gof";
  report.sample_size = emp.total;
  const auto total = static_cast<double>(emp.total);
  int categories = 0;
  double min_expected = std::numeric_limits<double>::infinity();
  double statistic = 0.0;
  for (std::size_t n = 0; n < expected.size(); ++n) {
    const auto observed = static_cast<double>(emp.counts[n]);
    if (expected[n] == 0.0) {
      if (emp.counts[n] != 0) {
        report.warnings.push_back("outcome " + std::to_string(n) +
                                  " has zero probability but nonzero count");
        statistic = std::numeric_limits<double>::infinity();
      }
      continue;
    }
    ++categories;
    const double e = total * expected[n];
    min_expected = std::min(min_expected, e);
    if (std::isfinite(statistic)) statistic += (observed - e) * (observed - e) / e;
  }
  if (min_expected < kMinExpectedCount) {
    report.warnings.push_back("smallest expected count " +
                              std::to_string(min_expected) +
                              " is below 5; chi-square approximation is poor");
  }
  report.statistic = statistic;
  report.dof = categories - 1;
  report.p_value = std::isfinite(statistic) ? chi_square_sf(statistic, report.dof)
                                            : 0.0;
  finish_statistical(report, alpha);
  return report;
}

TestReport chi_square_homogeneity(const EmpiricalDistribution& a,
                                  const EmpiricalDistribution& b, double alpha) {
  check_alpha(alpha);
  if (a.counts.size() != b.counts.size()) {
    throw ConfigError("homogeneity test needs equal category counts");
  }
  if (a.total == 0 || b.total == 0) {
    throw ConfigError("homogeneity test needs two non-empty samples");
  }
  const auto ta = static_cast<double>(a.total);
  const auto tb = static_cast<double>(b.total);
  TestReport report;
  report.name = "chi_square_homogeneity";
  report.sample_size = a.total + b.total;
  int categories = 0;
  double statistic = 0.0;
  double min_expected = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < a.counts.size(); ++n) {
    const auto ca = static_cast<double>(a.counts[n]);
    const auto cb = static_cast<double>(b.counts[n]);
    if (ca + cb == 0.0) continue;
    ++categories;
    const double ea = ta * (ca + cb) / (ta + tb);
    const double eb = tb * (ca + cb) / (ta + tb);
    min_expected = std::min({min_expected, ea, eb});
    statistic += (ca - ea) * (ca - ea) / ea + (cb - eb) * (cb - eb) / eb;
  }
  if (min_expected < kMinExpectedCount) {
    report.warnings.push_back("smallest expected count " +
                              std::to_string(min_expected) + " is below 5");
  }
  report.statistic = statistic;
  report.dof = std::max(categories - 1, 0);
  report.p_value = chi_square_sf(statistic, report.dof);
  finish_statistical(report, alpha);
  return report;
}

TestReport ks_uniformity(std::span<const double> values, double lo, double hi,
                         double alpha) {
  check_alpha(alpha);
  if (values.empty()) throw ConfigError("KS test needs at least one value");
  if (!(hi > lo)) throw ConfigError("KS test needs hi > lo");
  const double width = hi - lo;
  std::vector<double> cdf;
  cdf.reserve(values.size());
  for (double v : values) {
    if (!(v >= lo - kRangeSlack && v <= hi + kRangeSlack)) {
      throw RangeError("value " + std::to_string(v) + " outside [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    cdf.push_back(std::clamp((v - lo) / width, 0.0, 1.0));
  }
  std::sort(cdf.begin(), cdf.end());
  const auto m = static_cast<double>(cdf.size());
  double d = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    const double below = static_cast<double>(i) / m;
    const double above = static_cast<double>(i + 1) / m;
    d = std::max({d, above - cdf[i], cdf[i] - below});
  }
  TestReport report;
  report.name = "ks_uniformity";
  report.statistic = d;
  report.sample_size = cdf.size();
  report.p_value = kolmogorov_sf(std::sqrt(m) * d);
  finish_statistical(report, alpha);
  return report;
}

std::vector<double> quadrature_probabilities(const ModelConfig& cfg,
                                             std::uint32_t grid,
                                             unsigned workers) {
  if (grid < 64) {
    throw ConfigError("quadrature grid must be at least 64, got " +
                      std::to_string(grid));
  }
  workers = std::clamp(workers, 1u, grid);
  const std::size_t dim = cfg.dim();
  const double R = cfg.cutoff();

  // Cell centers, exactly antisymmetric about 0.
  std::vector<double> centers(grid);
  for (std::uint32_t i = 0; i < grid; ++i) {
    const auto offset = static_cast<double>(2 * static_cast<std::int64_t>(i) + 1 -
                                            static_cast<std::int64_t>(grid));
    centers[i] = offset / grid * R;
  }
  std::vector<double> radius_sq(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const double rho = disk_radius(cfg, n);
    radius_sq[n] = rho * rho;
  }

  const std::uint32_t mid = grid / 2;
  // Number of centers in row y with x^2 + y^2 <= rho^2. On each half the
  // inside cells form one contiguous run adjacent to the middle.
  auto row_count = [&](double y_sq, double rho_sq) -> std::uint64_t {
    if (rho_sq == 0.0 || y_sq > rho_sq) return 0;
    auto inside = [&](std::uint32_t i) {
      return centers[i] * centers[i] + y_sq <= rho_sq;
    };
    const auto left = std::views::iota(0u, mid);
    const auto right = std::views::iota(mid, grid);
    const auto first_in = std::ranges::partition_point(
        left, [&](std::uint32_t i) { return !inside(i); });
    const auto first_out = std::ranges::partition_point(right, inside);
    return static_cast<std::uint64_t>(mid - *first_in) +
           static_cast<std::uint64_t>(*first_out - mid);
  };

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(dim, 0));
  auto run = [&](unsigned w) {
    for (std::uint32_t j = w; j < grid; j += workers) {
      const double y_sq = centers[j] * centers[j];
      for (std::size_t n = 0; n < dim; ++n) {
        partial[w][n] += row_count(y_sq, radius_sq[n]);
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<std::uint64_t> cells(dim, 0);
  for (const auto& p : partial) {
    for (std::size_t n = 0; n < dim; ++n) cells[n] += p[n];
  }
  const std::uint64_t total = std::accumulate(cells.begin(), cells.end(),
                                              std::uint64_t{0});
  if (total == 0) throw ConfigError("no grid cell falls inside any outcome disk");
  std::vector<double> probs(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    probs[n] = static_cast<double>(cells[n]) / static_cast<double>(total);
  }
  return probs;
}

double quadrature_P(const ModelConfig& cfg, std::size_t n, std::uint32_t grid,
                    unsigned workers) {
  amplitude(cfg.state(), n);  // range check
  return quadrature_probabilities(cfg, grid, workers)[n];
}

}  // namespace bornsim
