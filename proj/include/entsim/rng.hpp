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

#pragma once

#include <cstdint>

namespace entsim {

/// Root of a reproducible random stream. Substream seeds are a pure function
/// of (seed, stream index), so any run can be replayed or sharded
/// deterministically.
struct RandomSeed {
  std::uint64_t value = 0;

  friend bool operator==(const RandomSeed &, const RandomSeed &) = default;
};

/// Stateless avalanche of (seed, stream index) into a child seed. Derivations
/// nest: derive(derive(s, i), j) keys block j of row i.
RandomSeed derive_substream_seed(RandomSeed base, std::uint64_t stream_index);

/// Name and revision of the generator stack, recorded in output metadata.
/// Bump the revision if the sequence for a given seed ever changes.
inline constexpr const char *kGeneratorId = "pcg32-xsh-rr+splitmix64-derive/1";

/// pcg32 (xsh-rr variant) seeded through a splitmix64 expansion of the
/// RandomSeed. Uniform doubles take two 32-bit outputs and carry the full 53
/// mantissa bits; each call counts as one consumed variate.
class RandomStream {
 public:
  explicit RandomStream(RandomSeed seed);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// One uniform variate in [0, 1).
  double next_uniform();

  /// Number of next_uniform() calls so far (operation contracts are stated in
  /// variates consumed).
  std::uint64_t variates_consumed() const { return n_uniforms_; }

  RandomSeed seed() const { return seed_; }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t n_uniforms_ = 0;
  RandomSeed seed_;
};

}  // namespace entsim
