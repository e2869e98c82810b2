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

#include "bornsim/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bornsim/errors.hpp"

namespace bornsim {

double Amplitude::modulus() const noexcept { return std::hypot(re, im); }

double Amplitude::phase() const noexcept {
  if (re == 0.0 && im == 0.0) return 0.0;
  const double theta = std::atan2(im, re);
  // atan2 returns -pi for a negative real axis approached from -0.0.
  return theta == -std::numbers::pi ? std::numbers::pi : theta;
}

double norm_squared(std::span<const Complex> raw) {
  double sum = 0.0;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const Complex& c = raw[j];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidAmplitudeError("amplitude " + std::to_string(j) +
                                  " is not finite");
    }
    sum += std::norm(c);
  }
  return sum;
}

StateVector normalize(std::span<const Complex> raw) {
  const double sum = norm_squared(raw);
  if (raw.empty() || sum == 0.0) {
    throw ZeroStateError("state vector has no nonzero amplitude");
  }
  if (!std::isfinite(sum)) {
    throw InvalidAmplitudeError("squared norm overflows");
  }
  const double scale = std::sqrt(sum);
  std::vector<Complex> amps(raw.begin(), raw.end());
  for (Complex& c : amps) c /= scale;
  return StateVector(std::move(amps));
}

Amplitude amplitude(const StateVector& state, std::size_t n) {
  if (n >= state.dim()) {
    throw IndexError("outcome " + std::to_string(n) + " out of range for dim " +
                     std::to_string(state.dim()));
  }
  const Complex& c = state.amplitudes()[n];
  return {c.real(), c.imag()};
}

double born_probability(const StateVector& state, std::size_t n) {
  return amplitude(state, n).modulus_squared();
}

std::vector<double> born_probabilities(const StateVector& state) {
  std::vector<double> out(state.dim());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = born_probability(state, n);
  return out;
}

StateVector tensor(const StateVector& particle, const StateVector& apparatus) {
  const auto p = particle.amplitudes();
  const auto a = apparatus.amplitudes();
  std::vector<Complex> amps;
  amps.reserve(p.size() * a.size());
  for (const Complex& pj : p) {
    for (const Complex& ak : a) amps.push_back(pj * ak);
  }
  return StateVector(std::move(amps));
}

}  // namespace bornsim
