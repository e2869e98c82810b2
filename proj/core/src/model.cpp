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

#include "bornsim/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bornsim/errors.hpp"

namespace bornsim {
namespace {

double principal_angle(double y, double x) noexcept {
  if (x == 0.0 && y == 0.0) return 0.0;
  const double theta = std::atan2(y, x);
  return theta == -std::numbers::pi ? std::numbers::pi : theta;
}

}  // namespace

double InitialLabel::r0() const noexcept { return std::hypot(x0, y0); }
double InitialLabel::theta0() const noexcept { return principal_angle(y0, x0); }

double FinalLabel::r() const noexcept { return std::hypot(x, y); }
double FinalLabel::theta() const noexcept { return principal_angle(y, x); }

ModelConfig::ModelConfig(StateVector state, double cutoff)
    : state_(std::move(state)), cutoff_(cutoff) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw ConfigError("cutoff R must be positive and finite, got " +
                      std::to_string(cutoff));
  }
}

double disk_radius(const ModelConfig& cfg, std::size_t n) {
  return amplitude(cfg.state(), n).modulus() * cfg.cutoff();
}

FinalLabel final_from_initial(const ModelConfig& cfg, const InitialLabel& init,
                              std::size_t n) {
  const Amplitude amp = amplitude(cfg.state(), n);
  const double R = cfg.cutoff();
  // Relative slack lets labels recovered by the inverse map pass back in.
  if (init.x0 * init.x0 + init.y0 * init.y0 > R * R * (1.0 + 1e-12)) {
    throw RangeError("initial label outside the cutoff disk");
  }
  return {amp.re * init.x0 - amp.im * init.y0,
          amp.re * init.y0 + amp.im * init.x0, n};
}

InitialLabel initial_from_final(const ModelConfig& cfg, const FinalLabel& fin) {
  const Amplitude amp = amplitude(cfg.state(), fin.n);
  const double denom = amp.modulus_squared();
  if (denom == 0.0) {
    throw DegenerateOutcomeError("outcome " + std::to_string(fin.n) +
                                 " has zero amplitude; label map not invertible");
  }
  return {(fin.x * amp.re + fin.y * amp.im) / denom,
          (fin.y * amp.re - fin.x * amp.im) / denom};
}

double jacobian(const Amplitude& amp) noexcept { return amp.modulus_squared(); }

bool region_contains(const ModelConfig& cfg, double x, double y, std::size_t n) {
  const double radius = disk_radius(cfg, n);
  return x * x + y * y <= radius * radius;
}

double disk_area(const ModelConfig& cfg, std::size_t n) {
  const double R = cfg.cutoff();
  return std::numbers::pi * born_probability(cfg.state(), n) * R * R;
}

double normalization_K(const ModelConfig& cfg) noexcept {
  const double R = cfg.cutoff();
  return 1.0 / (std::numbers::pi * R * R);
}

double closed_form_P(const ModelConfig& cfg, std::size_t n) {
  return normalization_K(cfg) * disk_area(cfg, n);
}

}  // namespace bornsim
