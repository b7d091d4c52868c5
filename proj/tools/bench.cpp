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

// Benchmark comparing the serial reference estimator against the OpenMP
// block-parallel one on the two hot Monte Carlo kernels, and checking that
// they agree bit-exactly.
//
//   entsim-bench [n]   (default n = 4e6 draws per kernel)

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "entsim/lhv.hpp"
#include "entsim/mc.hpp"
#include "entsim/sequential.hpp"
#include "entsim/vec3.hpp"

using namespace entsim;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_kernel(const char *name, const Sampler &sampler, std::uint64_t n, RandomSeed seed) {
  auto t0 = std::chrono::steady_clock::now();
  CorrelationEstimate serial = estimate_serial(sampler, n, seed);
  double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  CorrelationEstimate parallel = estimate_parallel(sampler, n, seed);
  double t_parallel = seconds_since(t0);

  bool identical = serial == parallel;
  std::printf("%-18s n=%llu  serial %.3fs (%.1f Mdraw/s)  parallel %.3fs (%.1f Mdraw/s)  "
              "speedup %.2fx  bit-identical: %s\n",
              name, static_cast<unsigned long long>(n), t_serial,
              static_cast<double>(n) / t_serial / 1e6, t_parallel,
              static_cast<double>(n) / t_parallel / 1e6, t_serial / t_parallel,
              identical ? "yes" : "NO");
  if (!identical) std::exit(1);
}

}  // namespace

int main(int argc, char **argv) {
  std::uint64_t n = 4000000;
  if (argc > 1) n = std::strtoull(argv[1], nullptr, 10);

#ifdef _OPENMP
  std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled (parallel path degenerates to serial)\n");
#endif

  UnitVector3 a = UnitVector3::in_plane_deg(0.0);
  UnitVector3 b = UnitVector3::in_plane_deg(60.0);

  Sampler pair_sampler = [a, b](RandomStream &rng) {
    PairSample s = simulate_pair(a, b, rng);
    return static_cast<double>(s.s_e * s.s_p);
  };
  bench_kernel("pair-correlation", pair_sampler, n, RandomSeed{42});

  HiddenVariableModel model = builtin_sign_model();
  Sampler lhv_sampler = [&model, a, b](RandomStream &rng) {
    std::any l = model.sample_lambda(rng);
    return static_cast<double>(model.response_e(a, l) * model.response_p(b, l));
  };
  bench_kernel("sign-model", lhv_sampler, n, RandomSeed{42});

  return 0;
}
