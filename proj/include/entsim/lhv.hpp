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

#include <any>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "entsim/mc.hpp"
#include "entsim/rng.hpp"
#include "entsim/vec3.hpp"

namespace entsim {

/// Default tolerance when testing inequalities on closed-form correlations.
inline constexpr double kClosedFormTol = 1e-9;

/// A local hidden-variable model: a sampler for the hidden parameter lambda
/// (opaque to this framework; models own its type) and deterministic +1/-1
/// responses per side depending only on the local axis and lambda.
///
/// Contract: response_e(b, lambda) == -response_p(b, lambda) for every axis b
/// and every sampled lambda (perfect anti-correlation at equal settings).
struct HiddenVariableModel {
  std::string name;
  std::function<std::any(RandomStream &)> sample_lambda;
  std::function<int(const UnitVector3 &, const std::any &)> response_e;
  std::function<int(const UnitVector3 &, const std::any &)> response_p;
  /// Closed form of the correlation at relative angle theta (degrees),
  /// if the model admits one; empty otherwise.
  std::function<double(double theta_deg)> exact_correlation;
};

/// The classic illustrative model: lambda uniform on the unit sphere,
/// response_e(a, lambda) = sign(a . lambda) with sign(0) = +1, and
/// response_p(b, lambda) = -sign(b . lambda). Its exact correlation at
/// relative angle theta is -1 + theta/90 (degrees). Sampling a lambda
/// consumes exactly two uniform variates.
HiddenVariableModel builtin_sign_model();

/// A two-axis correlation, with both a vector form and a closed form over the
/// relative angle in degrees (the degree form is exact at the canonical test
/// angles; coplanar scans use it).
struct CorrelationFn {
  std::string name;
  std::function<double(const UnitVector3 &, const UnitVector3 &)> evaluate;
  std::function<double(double theta_deg)> evaluate_deg;
};

/// The quantum closed form: evaluate(a, b) = -(a . b), and -cos(theta) over
/// the relative angle.
CorrelationFn qm_correlation();

/// Wrap a model's exact closed form as a CorrelationFn. Throws
/// validation_error if the model has none.
CorrelationFn exact_correlation_of(const HiddenVariableModel &model);

/// Monte Carlo estimate of E[response_e(a, lambda) * response_p(b, lambda)]
/// over n lambda draws (n >= 100). Deterministic given the seed; serial and
/// parallel execution agree bit-exactly. Throws model_contract_error if a
/// response falls outside {-1, +1}.
CorrelationEstimate lhv_correlation_mc(const HiddenVariableModel &model, const UnitVector3 &a,
                                       const UnitVector3 &b, std::uint64_t n, RandomSeed seed,
                                       ExecMode mode = ExecMode::serial);

/// One evaluation of the three-axis inequality
///     1 + P(b,c) >= |P(a,b) - P(a,c)|.
/// holds is margin >= -tolerance with margin = lhs - rhs. std_error combines
/// the statistical errors of the three correlations (0 for closed forms).
struct BellTestResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double std_error = 0.0;
  double tolerance = 0.0;
  bool holds = false;
};

BellTestResult bell_test(const CorrelationFn &P, const UnitVector3 &a, const UnitVector3 &b,
                         const UnitVector3 &c, double tolerance = kClosedFormTol);

/// Coplanar form over axis angles in degrees. Uses the closed form over
/// relative angles, which keeps the canonical triples exact.
BellTestResult bell_test_deg(const CorrelationFn &P, double a_deg, double b_deg, double c_deg,
                             double tolerance = kClosedFormTol);

/// Monte Carlo version for a model: three correlations estimated on
/// substreams 0..2 of `seed`; tolerance is 3x the combined standard error.
BellTestResult bell_test_mc(const HiddenVariableModel &model, const UnitVector3 &a,
                            const UnitVector3 &b, const UnitVector3 &c, std::uint64_t n,
                            RandomSeed seed, ExecMode mode = ExecMode::serial);

struct BellScanPoint {
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  BellTestResult result;
};

struct BellScanResult {
  std::vector<BellScanPoint> points;
  std::size_t worst_index = 0;  // most negative margin

  const BellScanPoint &worst() const { return points[worst_index]; }
  std::size_t violation_count() const;
};

/// Evaluate the inequality over the full theta1 x theta2 grid (degrees),
/// coplanar with a at 0.
BellScanResult bell_scan(const CorrelationFn &P, std::span<const double> theta1_deg,
                         std::span<const double> theta2_deg, double tolerance = kClosedFormTol);

/// Monte Carlo scan for a model; grid point (i, j) uses substream i*m+j.
BellScanResult bell_scan_mc(const HiddenVariableModel &model, std::span<const double> theta1_deg,
                            std::span<const double> theta2_deg, std::uint64_t n, RandomSeed seed,
                            ExecMode mode = ExecMode::serial);

/// |P(a,b) - P(a,b') + P(a',b) + P(a',b')|.
double chsh_value(const CorrelationFn &P, const UnitVector3 &a, const UnitVector3 &a2,
                  const UnitVector3 &b, const UnitVector3 &b2);

/// Coplanar degree form (exact at the canonical angles).
double chsh_value_deg(const CorrelationFn &P, double a_deg, double a2_deg, double b_deg,
                      double b2_deg);

struct ChshEstimate {
  double value = 0.0;
  double std_error = 0.0;  // combined over the four correlations
};

ChshEstimate chsh_mc(const HiddenVariableModel &model, const UnitVector3 &a,
                     const UnitVector3 &a2, const UnitVector3 &b, const UnitVector3 &b2,
                     std::uint64_t n, RandomSeed seed, ExecMode mode = ExecMode::serial);

/// Check of the decomposition
///   P(a,b) - P(a,c) = Int s_e(a,l) s_e(b,l) [s_e(b,l) s_e(c,l) - 1] rho(l) dl
/// for a model with an exact closed form.
///
/// rhs estimates the integrand by Monte Carlo; residual compares it against
/// the closed-form left side (statistical, |residual| <~ 3 * combined_std_error).
/// samplewise_residual estimates the pointwise difference between the
/// integrand and s_e(a,l) s_p(b,l) - s_e(a,l) s_p(c,l) on the same lambda
/// stream; for any model satisfying the anti-correlation contract it is 0.0
/// bit-exactly, degenerate axes included.
struct IdentityCheck {
  CorrelationEstimate rhs;
  double lhs_exact = 0.0;
  double residual = 0.0;
  double combined_std_error = 0.0;
  double samplewise_residual = 0.0;
};

IdentityCheck verify_identity_decomposition(const HiddenVariableModel &model,
                                            const UnitVector3 &a, const UnitVector3 &b,
                                            const UnitVector3 &c, std::uint64_t n,
                                            RandomSeed seed, ExecMode mode = ExecMode::serial);

}  // namespace entsim
