// Copyright 2026 The entsim Authors
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

#include "entsim/rng.hpp"

namespace entsim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer (Stafford mix13).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomSeed derive_substream_seed(RandomSeed base, std::uint64_t stream_index) {
  std::uint64_t z = mix64(base.value + kGolden * (stream_index + 1));
  return RandomSeed{mix64(z ^ base.value)};
}

RandomStream::RandomStream(RandomSeed seed) : seed_(seed) {
  // Expand the 64-bit seed into pcg32's (initstate, initseq) pair.
  std::uint64_t s = seed.value;
  std::uint64_t initstate = mix64(s += kGolden);
  std::uint64_t initseq = mix64(s += kGolden);
  state_ = 0;
  inc_ = (initseq << 1) | 1u;
  next_u32();
  state_ += initstate;
  next_u32();
}

std::uint32_t RandomStream::next_u32() {
  std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  auto xorshifted = static_cast<std::uint32_t>(((old >> 18) ^ old) >> 27);
  auto rot = static_cast<std::uint32_t>(old >> 59);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RandomStream::next_u64() {
  std::uint64_t hi = next_u32();
  std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double RandomStream::next_uniform() {
  ++n_uniforms_;
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace entsim
