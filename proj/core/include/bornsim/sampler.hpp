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

// Uniform sampler over final labels (x, y, n).
//
// The sampler only ever asks the model whether a point lies in the disk of
// outcome n. It never consults outcome probabilities, so the frequencies it
// produces are an independent check on them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bornsim/model.hpp"
#include "bornsim/philox.hpp"

namespace bornsim {

struct SamplerConfig {
  ModelConfig model;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  // Abort after stall_factor * N consecutive rejections for one label.
  std::uint64_t stall_factor = 1'000'000;
};

struct SampleBatch {
  // labels[i] is the label with global index i.
  std::vector<FinalLabel> labels;
  // Total rejection-loop iterations over the whole batch.
  std::uint64_t proposals_used = 0;
};

// Draws one label by rejection: pick n uniformly, pick (x, y) uniformly on the
// disk of radius R, accept iff (x, y) lies in the disk of outcome n. Adds the
// number of proposals consumed to *proposals when non-null.
FinalLabel sample_final(const SamplerConfig& cfg, CounterStream& rng,
                        std::uint64_t* proposals = nullptr);

// Stream owning global label index `index` under `seed`.
CounterStream label_stream(std::uint64_t seed, std::uint64_t index) noexcept;

// `count` i.i.d. labels. Label i is drawn from label_stream(seed, i); worker w
// of W draws the indices congruent to w mod W, so the result does not depend
// on the worker count or on thread scheduling.
SampleBatch sample_batch(const SamplerConfig& cfg, std::uint64_t count);

// Maps every label back to the hidden initial prefactor.
std::vector<InitialLabel> recover_initials(const SamplerConfig& cfg,
                                           const SampleBatch& batch);

}  // namespace bornsim
