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

// Finite-dimensional state vectors expressed directly in the eigenbasis of
// the measured observable. Basis states are implicit: entry j of a
// StateVector is the expansion coefficient on eigenstate j.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bornsim {

using Complex = std::complex<double>;

// Expansion coefficient a + ib of a state on one eigenstate.
struct Amplitude {
  double re = 0.0;
  double im = 0.0;

  double modulus() const noexcept;
  double modulus_squared() const noexcept { return re * re + im * im; }
  // Argument in (-pi, pi]; 0 for the zero amplitude.
  double phase() const noexcept;

  friend bool operator==(const Amplitude&, const Amplitude&) = default;
};

// Normalized list of amplitudes. Immutable once constructed; the only ways
// to obtain one are normalize() and tensor().
class StateVector {
 public:
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}

  friend StateVector normalize(std::span<const Complex> raw);
  friend StateVector tensor(const StateVector& particle,
                            const StateVector& apparatus);

  std::vector<Complex> amps_;
};

// Sum of |raw_j|^2. Throws InvalidAmplitudeError on a non-finite entry.
double norm_squared(std::span<const Complex> raw);

// Scales raw to unit norm. Throws ZeroStateError for an all-zero or empty
// input and InvalidAmplitudeError for NaN/inf entries.
StateVector normalize(std::span<const Complex> raw);

// Throws IndexError unless n < state.dim().
Amplitude amplitude(const StateVector& state, std::size_t n);

// |<n|psi>|^2.
double born_probability(const StateVector& state, std::size_t n);
std::vector<double> born_probabilities(const StateVector& state);

// Product state of dimension N_p * N_a, flattened with the particle index
// major: entry j * N_a + k holds particle[j] * apparatus[k].
StateVector tensor(const StateVector& particle, const StateVector& apparatus);

}  // namespace bornsim
