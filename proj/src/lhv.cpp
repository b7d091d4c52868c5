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

#include "entsim/lhv.hpp"

#include <cmath>

#include "entsim/angles.hpp"
#include "entsim/errors.hpp"

namespace entsim {

namespace {

int checked_response(const std::function<int(const UnitVector3 &, const std::any &)> &f,
                     const UnitVector3 &axis, const std::any &lambda) {
  int v = f(axis, lambda);
  if (v != 1 && v != -1) {
    throw model_contract_error("hidden-variable response outside {-1, +1}");
  }
  return v;
}

double combine_stderr(std::initializer_list<double> errs) {
  double s = 0.0;
  for (double e : errs) s += e * e;
  return std::sqrt(s);
}

}  // namespace

HiddenVariableModel builtin_sign_model() {
  HiddenVariableModel m;
  m.name = "sign";
  m.sample_lambda = [](RandomStream &rng) -> std::any {
    // uniform point on the sphere: z uniform in [-1,1], azimuth uniform
    double z = 2.0 * rng.next_uniform() - 1.0;
    double phi = 2.0 * kPi * rng.next_uniform();
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVector3::normalized(r * std::cos(phi), r * std::sin(phi), z);
  };
  m.response_e = [](const UnitVector3 &axis, const std::any &lambda) {
    const auto &l = std::any_cast<const UnitVector3 &>(lambda);
    return dot(axis, l) >= 0.0 ? 1 : -1;  // ties resolve to +1
  };
  m.response_p = [](const UnitVector3 &axis, const std::any &lambda) {
    const auto &l = std::any_cast<const UnitVector3 &>(lambda);
    return dot(axis, l) >= 0.0 ? -1 : 1;
  };
  // Hemisphere overlap makes the correlation linear in the angle:
  // -1 + 2*theta/pi, i.e. theta/90 - 1 in degrees (exact rational arithmetic
  // at the canonical integer angles).
  m.exact_correlation = [](double theta_deg) {
    return relative_angle_deg(0.0, theta_deg) / 90.0 - 1.0;
  };
  return m;
}

CorrelationFn qm_correlation() {
  CorrelationFn f;
  f.name = "qm";
  f.evaluate = [](const UnitVector3 &a, const UnitVector3 &b) {
    double d = dot(a, b);
    return d == 0.0 ? 0.0 : -d;  // avoid -0 in reports
  };
  f.evaluate_deg = [](double theta_deg) {
    double c = cos_deg(theta_deg);
    return c == 0.0 ? 0.0 : -c;
  };
  return f;
}

CorrelationFn exact_correlation_of(const HiddenVariableModel &model) {
  if (!model.exact_correlation) {
    throw validation_error("model '" + model.name + "' has no exact correlation closed form");
  }
  CorrelationFn f;
  f.name = model.name + "-exact";
  auto exact = model.exact_correlation;
  f.evaluate = [exact](const UnitVector3 &a, const UnitVector3 &b) {
    return exact(rad_to_deg(angle_between(a, b)));
  };
  f.evaluate_deg = exact;
  return f;
}

CorrelationEstimate lhv_correlation_mc(const HiddenVariableModel &model, const UnitVector3 &a,
                                       const UnitVector3 &b, std::uint64_t n, RandomSeed seed,
                                       ExecMode mode) {
  if (n < 100) throw validation_error("lhv_correlation_mc: need at least 100 samples");
  Sampler sampler = [&model, a, b](RandomStream &rng) {
    std::any lambda = model.sample_lambda(rng);
    int se = checked_response(model.response_e, a, lambda);
    int sp = checked_response(model.response_p, b, lambda);
    return static_cast<double>(se * sp);
  };
  return estimate(sampler, n, seed, mode);
}

namespace {

BellTestResult make_bell_result(double pbc, double pab, double pac, double std_error,
                                double tolerance) {
  BellTestResult r;
  r.lhs = 1.0 + pbc;
  r.rhs = std::fabs(pab - pac);
  r.margin = r.lhs - r.rhs;
  r.std_error = std_error;
  r.tolerance = tolerance;
  r.holds = r.margin >= -tolerance;
  return r;
}

}  // namespace

BellTestResult bell_test(const CorrelationFn &P, const UnitVector3 &a, const UnitVector3 &b,
                         const UnitVector3 &c, double tolerance) {
  if (tolerance < 0.0) throw validation_error("bell_test: tolerance must be >= 0");
  return make_bell_result(P.evaluate(b, c), P.evaluate(a, b), P.evaluate(a, c), 0.0, tolerance);
}

BellTestResult bell_test_deg(const CorrelationFn &P, double a_deg, double b_deg, double c_deg,
                             double tolerance) {
  if (tolerance < 0.0) throw validation_error("bell_test_deg: tolerance must be >= 0");
  double pbc = P.evaluate_deg(relative_angle_deg(b_deg, c_deg));
  double pab = P.evaluate_deg(relative_angle_deg(a_deg, b_deg));
  double pac = P.evaluate_deg(relative_angle_deg(a_deg, c_deg));
  return make_bell_result(pbc, pab, pac, 0.0, tolerance);
}

BellTestResult bell_test_mc(const HiddenVariableModel &model, const UnitVector3 &a,
                            const UnitVector3 &b, const UnitVector3 &c, std::uint64_t n,
                            RandomSeed seed, ExecMode mode) {
  CorrelationEstimate ebc = lhv_correlation_mc(model, b, c, n, derive_substream_seed(seed, 0), mode);
  CorrelationEstimate eab = lhv_correlation_mc(model, a, b, n, derive_substream_seed(seed, 1), mode);
  CorrelationEstimate eac = lhv_correlation_mc(model, a, c, n, derive_substream_seed(seed, 2), mode);
  double se = combine_stderr({ebc.std_error, eab.std_error, eac.std_error});
  return make_bell_result(ebc.mean, eab.mean, eac.mean, se, 3.0 * se);
}

std::size_t BellScanResult::violation_count() const {
  std::size_t k = 0;
  for (const BellScanPoint &p : points) {
    if (!p.result.holds) ++k;
  }
  return k;
}

namespace {

BellScanResult finish_scan(std::vector<BellScanPoint> points) {
  BellScanResult out;
  out.points = std::move(points);
  for (std::size_t i = 1; i < out.points.size(); ++i) {
    if (out.points[i].result.margin < out.points[out.worst_index].result.margin) {
      out.worst_index = i;
    }
  }
  return out;
}

}  // namespace

BellScanResult bell_scan(const CorrelationFn &P, std::span<const double> theta1_deg,
                         std::span<const double> theta2_deg, double tolerance) {
  if (theta1_deg.empty() || theta2_deg.empty()) {
    throw validation_error("bell_scan: empty angle grid");
  }
  std::vector<BellScanPoint> points;
  points.reserve(theta1_deg.size() * theta2_deg.size());
  for (double t1 : theta1_deg) {
    for (double t2 : theta2_deg) {
      points.push_back({t1, t2, bell_test_deg(P, 0.0, t1, t2, tolerance)});
    }
  }
  return finish_scan(std::move(points));
}

BellScanResult bell_scan_mc(const HiddenVariableModel &model, std::span<const double> theta1_deg,
                            std::span<const double> theta2_deg, std::uint64_t n, RandomSeed seed,
                            ExecMode mode) {
  if (theta1_deg.empty() || theta2_deg.empty()) {
    throw validation_error("bell_scan_mc: empty angle grid");
  }
  std::size_t rows = theta1_deg.size(), cols = theta2_deg.size();
  std::vector<BellScanPoint> points(rows * cols);
  UnitVector3 a = UnitVector3::in_plane_deg(0.0);
  std::int64_t total = static_cast<std::int64_t>(rows * cols);
  // Grid points are independent; each owns substream i*cols+j. Inner
  // estimates run serially so parallel and serial scans agree bit-exactly.
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
      std::size_t i = static_cast<std::size_t>(k) / cols;
      std::size_t j = static_cast<std::size_t>(k) % cols;
      UnitVector3 b = UnitVector3::in_plane_deg(theta1_deg[i]);
      UnitVector3 c = UnitVector3::in_plane_deg(theta2_deg[j]);
      points[static_cast<std::size_t>(k)] = {
          theta1_deg[i], theta2_deg[j],
          bell_test_mc(model, a, b, c, n,
                       derive_substream_seed(seed, static_cast<std::uint64_t>(k)),
                       ExecMode::serial)};
    }
  } else {
    for (std::int64_t k = 0; k < total; ++k) {
      std::size_t i = static_cast<std::size_t>(k) / cols;
      std::size_t j = static_cast<std::size_t>(k) % cols;
      UnitVector3 b = UnitVector3::in_plane_deg(theta1_deg[i]);
      UnitVector3 c = UnitVector3::in_plane_deg(theta2_deg[j]);
      points[static_cast<std::size_t>(k)] = {
          theta1_deg[i], theta2_deg[j],
          bell_test_mc(model, a, b, c, n,
                       derive_substream_seed(seed, static_cast<std::uint64_t>(k)),
                       ExecMode::serial)};
    }
  }
  return finish_scan(std::move(points));
}

double chsh_value(const CorrelationFn &P, const UnitVector3 &a, const UnitVector3 &a2,
                  const UnitVector3 &b, const UnitVector3 &b2) {
  return std::fabs(P.evaluate(a, b) - P.evaluate(a, b2) + P.evaluate(a2, b) +
                   P.evaluate(a2, b2));
}

double chsh_value_deg(const CorrelationFn &P, double a_deg, double a2_deg, double b_deg,
                      double b2_deg) {
  auto at = [&P](double t1, double t2) { return P.evaluate_deg(relative_angle_deg(t1, t2)); };
  return std::fabs(at(a_deg, b_deg) - at(a_deg, b2_deg) + at(a2_deg, b_deg) +
                   at(a2_deg, b2_deg));
}

ChshEstimate chsh_mc(const HiddenVariableModel &model, const UnitVector3 &a,
                     const UnitVector3 &a2, const UnitVector3 &b, const UnitVector3 &b2,
                     std::uint64_t n, RandomSeed seed, ExecMode mode) {
  CorrelationEstimate ab = lhv_correlation_mc(model, a, b, n, derive_substream_seed(seed, 0), mode);
  CorrelationEstimate ab2 =
      lhv_correlation_mc(model, a, b2, n, derive_substream_seed(seed, 1), mode);
  CorrelationEstimate a2b =
      lhv_correlation_mc(model, a2, b, n, derive_substream_seed(seed, 2), mode);
  CorrelationEstimate a2b2 =
      lhv_correlation_mc(model, a2, b2, n, derive_substream_seed(seed, 3), mode);
  ChshEstimate out;
  out.value = std::fabs(ab.mean - ab2.mean + a2b.mean + a2b2.mean);
  out.std_error =
      combine_stderr({ab.std_error, ab2.std_error, a2b.std_error, a2b2.std_error});
  return out;
}

IdentityCheck verify_identity_decomposition(const HiddenVariableModel &model,
                                            const UnitVector3 &a, const UnitVector3 &b,
                                            const UnitVector3 &c, std::uint64_t n,
                                            RandomSeed seed, ExecMode mode) {
  if (!model.exact_correlation) {
    throw validation_error("verify_identity_decomposition: model needs an exact closed form");
  }

  // Right side integrand: s_e(a) s_e(b) [s_e(b) s_e(c) - 1].
  Sampler rhs_sampler = [&model, a, b, c](RandomStream &rng) {
    std::any l = model.sample_lambda(rng);
    double ea = checked_response(model.response_e, a, l);
    double eb = checked_response(model.response_e, b, l);
    double ec = checked_response(model.response_e, c, l);
    return ea * eb * (eb * ec - 1.0);
  };
  // Pointwise defect against the correlation integrands; identically 0 for
  // anti-correlated responses (s_p = -s_e makes the terms cancel exactly).
  Sampler defect_sampler = [&model, a, b, c](RandomStream &rng) {
    std::any l = model.sample_lambda(rng);
    double ea = checked_response(model.response_e, a, l);
    double eb = checked_response(model.response_e, b, l);
    double ec = checked_response(model.response_e, c, l);
    double pb = checked_response(model.response_p, b, l);
    double pc = checked_response(model.response_p, c, l);
    return ea * eb * (eb * ec - 1.0) - (ea * pb - ea * pc);
  };

  IdentityCheck out;
  out.rhs = estimate(rhs_sampler, n, seed, mode);
  // Same seed: the defect pass revisits the identical lambda sequence.
  out.samplewise_residual = estimate(defect_sampler, n, seed, mode).mean;

  double tab = rad_to_deg(angle_between(a, b));
  double tac = rad_to_deg(angle_between(a, c));
  out.lhs_exact = model.exact_correlation(tab) - model.exact_correlation(tac);
  out.residual = out.rhs.mean - out.lhs_exact;
  out.combined_std_error = out.rhs.std_error;
  return out;
}

}  // namespace entsim
