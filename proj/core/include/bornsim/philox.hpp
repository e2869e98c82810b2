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

#include <array>
#include <cstdint>
#include <string_view>

namespace bornsim {

// Philox4x32-10 counter-based block cipher (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC 2011). Output matches the Random123
// known-answer vectors.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr int kRounds = 10;

  static constexpr Counter block(Counter ctr, Key key) noexcept {
    for (int round = 0; round < kRounds; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
};

// One independent random stream: the key is the 64-bit seed and the upper
// counter half is the 64-bit stream id, so each (seed, stream) pair owns
// 2^64 blocks of 128 bits.
class CounterStream {
 public:
  static constexpr std::string_view kAlgorithm =
      "philox4x32-10; key=seed, counter=(block, stream=global label index); "
      "bornsim-rng-v1";

  CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::uint64_t next_u64() noexcept {
    if (cursor_ == 2) refill();
    const std::uint64_t word =
        std::uint64_t{buffer_[2 * cursor_]} |
        (std::uint64_t{buffer_[2 * cursor_ + 1]} << 32);
    ++cursor_;
    return word;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., bound - 1}, unbiased (Lemire's multiply-shift with
  // rejection). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    std::uint64_t low = 0;
    std::uint64_t high = mul_wide(next_u64(), bound, low);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) high = mul_wide(next_u64(), bound, low);
    }
    return high;
  }

  std::uint64_t blocks_used() const noexcept { return block_; }

 private:
  // Full 128-bit product a * b; returns the high word.
  static constexpr std::uint64_t mul_wide(std::uint64_t a, std::uint64_t b,
                                          std::uint64_t& low) noexcept {
    const std::uint64_t a_lo = a & 0xffffffffu, a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xffffffffu, b_hi = b >> 32;
    const std::uint64_t ll = a_lo * b_lo;
    const std::uint64_t lh = a_lo * b_hi;
    const std::uint64_t hl = a_hi * b_lo;
    const std::uint64_t mid = (ll >> 32) + (lh & 0xffffffffu) + (hl & 0xffffffffu);
    low = (mid << 32) | (ll & 0xffffffffu);
    return a_hi * b_hi + (lh >> 32) + (hl >> 32) + (mid >> 32);
  }

  void refill() noexcept {
    buffer_ = Philox4x32::block(
        {static_cast<std::uint32_t>(block_),
         static_cast<std::uint32_t>(block_ >> 32),
         static_cast<std::uint32_t>(stream_),
         static_cast<std::uint32_t>(stream_ >> 32)},
        key_);
    ++block_;
    cursor_ = 0;
  }

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int cursor_ = 2;
};

}  // namespace bornsim
