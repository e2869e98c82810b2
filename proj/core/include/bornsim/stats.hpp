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

// Empirical outcome distributions, goodness-of-fit and uniformity tests, and
// a grid-quadrature estimate of outcome probabilities that is independent of
// both the sampler and the closed form.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bornsim/model.hpp"
#include "bornsim/sampler.hpp"

namespace bornsim {

struct EmpiricalDistribution {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  double frequency(std::size_t n) const {
    return static_cast<double>(counts.at(n)) / static_cast<double>(total);
  }
};

// Outcome of one check. Statistical checks carry a p-value and alpha;
// deterministic checks carry a tolerance that the statistic must not exceed.
struct TestReport {
  std::string name;
  double statistic = 0.0;
  int dof = 0;
  std::uint64_t sample_size = 0;
  std::optional<double> p_value;  // in [0, 1]
  std::optional<double> alpha;
  std::optional<double> tolerance;
  bool passed = false;
  std::vector<std::string> warnings;
};

// Counts labels per outcome. Throws ConfigError for an empty input and
// IndexError for a label with n >= dim.
EmpiricalDistribution marginalize(std::span<const FinalLabel> labels,
                                  std::size_t dim);
EmpiricalDistribution marginalize(const SampleBatch& batch, std::size_t dim);

// Pearson goodness of fit. Outcomes with expected probability 0 are dropped
// from the degrees of freedom; a nonzero count on any of them fails the test
// outright with an infinite statistic. Throws ConfigError if `expected` does
// not sum to 1 within 1e-9 or has the wrong length.
TestReport chi_square_gof(const EmpiricalDistribution& emp,
                          std::span<const double> expected, double alpha);

// Two-sample chi-square test of homogeneity on a 2 x k contingency table.
// Categories empty in both samples are dropped.
TestReport chi_square_homogeneity(const EmpiricalDistribution& a,
                                  const EmpiricalDistribution& b, double alpha);

// One-sample Kolmogorov-Smirnov test against Uniform[lo, hi], with the
// asymptotic p-value at lambda = sqrt(m) * D. Values may stray outside
// [lo, hi] by 1e-9 (they are clamped); further out throws RangeError.
TestReport ks_uniformity(std::span<const double> values, double lo, double hi,
                         double alpha);

// Midpoint-rule mass of every outcome disk on a grid x grid lattice over
// [-R, R]^2, normalized by the total over all outcomes. Throws ConfigError for
// grid < 64. Row sums are integer cell counts, so the result does not depend
// on `workers`.
std::vector<double> quadrature_probabilities(const ModelConfig& cfg,
                                             std::uint32_t grid,
                                             unsigned workers = 1);
double quadrature_P(const ModelConfig& cfg, std::size_t n, std::uint32_t grid,
                    unsigned workers = 1);

}  // namespace bornsim
