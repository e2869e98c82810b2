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

#pragma once

#include <stdexcept>
#include <string>

namespace bornsim {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All amplitudes are zero, so no state vector can be formed.
class ZeroStateError : public Error {
 public:
  using Error::Error;
};

// An amplitude is NaN or infinite.
class InvalidAmplitudeError : public Error {
 public:
  using Error::Error;
};

// Outcome index outside [0, dim).
class IndexError : public Error {
 public:
  using Error::Error;
};

// The label map is not invertible for an outcome with zero amplitude.
class DegenerateOutcomeError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration, precondition, or scenario file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Rejection sampler exceeded its consecutive-rejection budget.
class SamplerStallError : public Error {
 public:
  using Error::Error;
};

// A value lies outside the interval it was declared to belong to.
class RangeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace bornsim
