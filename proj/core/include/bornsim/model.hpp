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

// Label spaces of the equal-a-priori measurement model.
//
// A particle's pre-measurement state carries a hidden complex prefactor
// x0 + i*y0 (modulus at most the cutoff R). When outcome n occurs, the
// prefactor is multiplied by <n|psi>, giving the final label (x, y, n).
// Final labels of outcome n therefore fill a disk of radius |<n|psi>| * R.

#pragma once

#include <cstddef>

#include "bornsim/hilbert.hpp"

namespace bornsim {

struct InitialLabel {
  double x0 = 0.0;
  double y0 = 0.0;

  double r0() const noexcept;
  // In (-pi, pi]; 0 at the origin.
  double theta0() const noexcept;

  friend bool operator==(const InitialLabel&, const InitialLabel&) = default;
};

struct FinalLabel {
  double x = 0.0;
  double y = 0.0;
  std::size_t n = 0;

  double r() const noexcept;
  // In (-pi, pi]; 0 at the origin.
  double theta() const noexcept;

  friend bool operator==(const FinalLabel&, const FinalLabel&) = default;
  friend auto operator<=>(const FinalLabel&, const FinalLabel&) = default;
};

// A state together with the cutoff R on the hidden modulus.
class ModelConfig {
 public:
  // Throws ConfigError unless cutoff is positive and finite.
  explicit ModelConfig(StateVector state, double cutoff = 1.0);

  const StateVector& state() const noexcept { return state_; }
  double cutoff() const noexcept { return cutoff_; }
  std::size_t dim() const noexcept { return state_.dim(); }

 private:
  StateVector state_;
  double cutoff_;
};

// Radius |<n|psi>| * R of the disk of admissible final labels for outcome n.
double disk_radius(const ModelConfig& cfg, std::size_t n);

// x = a*x0 - b*y0, y = a*y0 + b*x0 with <n|psi> = a + ib. Throws IndexError
// for a bad outcome and RangeError if init lies outside the cutoff disk.
FinalLabel final_from_initial(const ModelConfig& cfg, const InitialLabel& init,
                              std::size_t n);

// Inverse map (x0 + i*y0) = (x + iy) / (a + ib). Throws
// DegenerateOutcomeError when <n|psi> = 0.
InitialLabel initial_from_final(const ModelConfig& cfg, const FinalLabel& fin);

// Determinant of d(x, y) / d(x0, y0), which is a^2 + b^2.
double jacobian(const Amplitude& amp) noexcept;

// Closed disk x^2 + y^2 <= (|<n|psi>| R)^2. A zero-amplitude outcome admits
// only the origin.
bool region_contains(const ModelConfig& cfg, double x, double y, std::size_t n);

// pi |<n|psi>|^2 R^2.
double disk_area(const ModelConfig& cfg, std::size_t n);

// Uniform density 1 / (pi R^2) that makes the label measure a probability.
double normalization_K(const ModelConfig& cfg) noexcept;

// K * disk_area(n): probability mass of outcome n under uniform labels.
double closed_form_P(const ModelConfig& cfg, std::size_t n);

}  // namespace bornsim
