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

#include "bornsim/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "bornsim/errors.hpp"

namespace bornsim {
namespace {

void validate(const SamplerConfig& cfg) {
  if (cfg.workers == 0) throw ConfigError("workers must be at least 1");
  if (cfg.stall_factor == 0) throw ConfigError("stall_factor must be at least 1");
}

}  // namespace

FinalLabel sample_final(const SamplerConfig& cfg, CounterStream& rng,
                        std::uint64_t* proposals) {
  const ModelConfig& model = cfg.model;
  const std::size_t dim = model.dim();
  const double R = model.cutoff();

  // Outcomes whose disk is a single point. Hitting the origin exactly must
  // not emit them.
  std::vector<bool> degenerate(dim);
  bool any_open = false;
  for (std::size_t n = 0; n < dim; ++n) {
    degenerate[n] = disk_radius(model, n) == 0.0;
    any_open = any_open || !degenerate[n];
  }
  if (!any_open) throw ZeroStateError("state has no nonzero amplitude");

  const std::uint64_t limit = cfg.stall_factor * dim;
  for (std::uint64_t attempt = 1; attempt <= limit; ++attempt) {
    const auto n = static_cast<std::size_t>(rng.uniform_below(dim));
    const double r = R * std::sqrt(rng.uniform01());
    const double phi = 2.0 * std::numbers::pi * rng.uniform01();
    const double x = r * std::cos(phi);
    const double y = r * std::sin(phi);
    if (!degenerate[n] && region_contains(model, x, y, n)) {
      if (proposals != nullptr) *proposals += attempt;
      return {x, y, n};
    }
  }
  throw SamplerStallError("no proposal accepted after " + std::to_string(limit) +
                          " consecutive rejections");
}

CounterStream label_stream(std::uint64_t seed, std::uint64_t index) noexcept {
  return CounterStream(seed, index);
}

SampleBatch sample_batch(const SamplerConfig& cfg, std::uint64_t count) {
  validate(cfg);
  if (count == 0) throw ConfigError("sample count must be at least 1");

  SampleBatch batch;
  batch.labels.resize(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(cfg.workers, count));
  std::vector<std::uint64_t> proposals(workers, 0);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < count; i += workers) {
        CounterStream rng = label_stream(cfg.seed, i);
        batch.labels[i] = sample_final(cfg, rng, &proposals[w]);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::uint64_t p : proposals) batch.proposals_used += p;
  return batch;
}

std::vector<InitialLabel> recover_initials(const SamplerConfig& cfg,
                                           const SampleBatch& batch) {
  std::vector<InitialLabel> out;
  out.reserve(batch.labels.size());
  for (const FinalLabel& fin : batch.labels) {
    out.push_back(initial_from_final(cfg.model, fin));
  }
  return out;
}

}  // namespace bornsim
