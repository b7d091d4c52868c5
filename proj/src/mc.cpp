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

#include "entsim/mc.hpp"

#include <cmath>
#include <cstddef>

#include "entsim/errors.hpp"
#include "entsim/version.hpp"

namespace entsim {

namespace {

struct BlockSums {
  double sum = 0.0;
  double sumsq = 0.0;
};

BlockSums run_block(const Sampler &sampler, RandomSeed seed, std::uint64_t count) {
  RandomStream rng(seed);
  BlockSums s;
  for (std::uint64_t i = 0; i < count; ++i) {
    double v = sampler(rng);
    s.sum += v;
    s.sumsq += v * v;
  }
  return s;
}

CorrelationEstimate reduce(const std::vector<BlockSums> &parts, std::uint64_t n) {
  double sum = 0.0;
  double sumsq = 0.0;
  for (const BlockSums &p : parts) {  // fixed block order keeps the rounding deterministic
    sum += p.sum;
    sumsq += p.sumsq;
  }
  double nd = static_cast<double>(n);
  double mean = sum / nd;
  double var = (sumsq - sum * sum / nd) / (nd - 1.0);
  if (var < 0.0) var = 0.0;  // cancellation can leave a tiny negative
  return {mean, std::sqrt(var / nd), n};
}

std::uint64_t block_count_for(std::uint64_t k, std::uint64_t n) {
  std::uint64_t lo = k * kEstimateBlock;
  std::uint64_t hi = lo + kEstimateBlock;
  return (hi > n ? n : hi) - lo;
}

}  // namespace

CorrelationEstimate estimate_serial(const Sampler &sampler, std::uint64_t n, RandomSeed seed) {
  if (n < 2) throw validation_error("estimate: need at least 2 samples");
  std::uint64_t nblocks = (n + kEstimateBlock - 1) / kEstimateBlock;
  std::vector<BlockSums> parts(nblocks);
  for (std::uint64_t k = 0; k < nblocks; ++k) {
    parts[k] = run_block(sampler, derive_substream_seed(seed, k), block_count_for(k, n));
  }
  return reduce(parts, n);
}

CorrelationEstimate estimate_parallel(const Sampler &sampler, std::uint64_t n, RandomSeed seed) {
  if (n < 2) throw validation_error("estimate: need at least 2 samples");
  std::uint64_t nblocks = (n + kEstimateBlock - 1) / kEstimateBlock;
  std::vector<BlockSums> parts(nblocks);
  std::int64_t nb = static_cast<std::int64_t>(nblocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < nb; ++k) {
    std::uint64_t ku = static_cast<std::uint64_t>(k);
    parts[ku] = run_block(sampler, derive_substream_seed(seed, ku), block_count_for(ku, n));
  }
  return reduce(parts, n);
}

CorrelationEstimate estimate(const Sampler &sampler, std::uint64_t n, RandomSeed seed,
                             ExecMode mode) {
  return mode == ExecMode::parallel ? estimate_parallel(sampler, n, seed)
                                    : estimate_serial(sampler, n, seed);
}

std::vector<SweepRow> sweep(const ParamSampler &sampler, std::span<const double> grid,
                            std::uint64_t n, RandomSeed seed, ExecMode mode) {
  if (grid.empty()) throw validation_error("sweep: empty parameter grid");
  std::vector<SweepRow> rows(grid.size());
  std::int64_t m = static_cast<std::int64_t>(grid.size());
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) {
      double p = grid[static_cast<std::size_t>(i)];
      Sampler bound = [&sampler, p](RandomStream &rng) { return sampler(p, rng); };
      rows[static_cast<std::size_t>(i)] = {
          p, estimate_serial(bound, n, derive_substream_seed(seed, static_cast<std::uint64_t>(i)))};
    }
  } else {
    for (std::int64_t i = 0; i < m; ++i) {
      double p = grid[static_cast<std::size_t>(i)];
      Sampler bound = [&sampler, p](RandomStream &rng) { return sampler(p, rng); };
      rows[static_cast<std::size_t>(i)] = {
          p, estimate_serial(bound, n, derive_substream_seed(seed, static_cast<std::uint64_t>(i)))};
    }
  }
  return rows;
}

nlohmann::json RunMetadata::to_json() const {
  return nlohmann::json{{"seed", seed.value},
                        {"generator", generator},
                        {"samples", samples},
                        {"artifact_version", artifact_version.empty() ? kArtifactVersion
                                                                      : artifact_version}};
}

}  // namespace entsim
