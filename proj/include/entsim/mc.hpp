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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "entsim/rng.hpp"

#include "json.hpp"

namespace entsim {

/// Sample mean with standard error (sample standard deviation / sqrt(n)).
struct CorrelationEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;

  friend bool operator==(const CorrelationEstimate &, const CorrelationEstimate &) = default;
};

enum class ExecMode { serial, parallel };

/// One scalar draw. The sampler may consume any number of variates, but must
/// consume the same number on every call for a given experiment.
using Sampler = std::function<double(RandomStream &)>;

/// Mean and standard error of `sampler` over exactly n draws.
///
/// Draws are grouped into fixed blocks of kEstimateBlock samples; block k runs
/// on substream k of `seed`, and block partial sums are reduced in block
/// order. Serial and parallel execution therefore produce bit-identical
/// results, and the serial path is the reference the parallel one is tested
/// against. Throws validation_error for n < 2 (no standard error exists).
CorrelationEstimate estimate(const Sampler &sampler, std::uint64_t n, RandomSeed seed,
                             ExecMode mode = ExecMode::serial);

/// Serial reference implementation (no OpenMP, same block arithmetic).
CorrelationEstimate estimate_serial(const Sampler &sampler, std::uint64_t n, RandomSeed seed);

/// OpenMP block-parallel implementation; bit-identical to estimate_serial.
CorrelationEstimate estimate_parallel(const Sampler &sampler, std::uint64_t n, RandomSeed seed);

inline constexpr std::uint64_t kEstimateBlock = 8192;

/// Sampler family indexed by a scalar parameter (e.g. a relative angle).
using ParamSampler = std::function<double(double param, RandomStream &)>;

struct SweepRow {
  double param = 0.0;
  CorrelationEstimate est;
};

/// One estimate per grid point. Row i draws from substream i of `seed`, keyed
/// by grid *index*: permuting the grid permutes which substream lands on which
/// parameter, so rows match across runs only when the grid order matches.
/// Rows are independent and may run in parallel; output order follows grid
/// order either way.
std::vector<SweepRow> sweep(const ParamSampler &sampler, std::span<const double> grid,
                            std::uint64_t n, RandomSeed seed, ExecMode mode = ExecMode::serial);

/// Provenance block embedded in every report.
struct RunMetadata {
  RandomSeed seed;
  std::string generator = kGeneratorId;
  std::uint64_t samples = 0;
  std::string artifact_version;

  nlohmann::json to_json() const;
};

}  // namespace entsim
