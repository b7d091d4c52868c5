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

#include "entsim/angles.hpp"

#include <cmath>

namespace entsim {

namespace {

// Correctly rounded doubles for the special first-quadrant values.
const double kSqrt3Over2 = std::sqrt(3.0) / 2.0;
const double kSqrtHalf = std::sqrt(0.5);

// Reduce to [0, 360). fmod is exact, and the +360 fixup is exact for the
// magnitudes that survive it.
double reduce_deg(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  return r;
}

// cos on [0, 90] with table hits at 0, 30, 45, 60, 90.
double cos_deg_quadrant(double r) {
  if (r == 0.0) return 1.0;
  if (r == 30.0) return kSqrt3Over2;
  if (r == 45.0) return kSqrtHalf;
  if (r == 60.0) return 0.5;
  if (r == 90.0) return 0.0;
  return std::cos(deg_to_rad(r));
}

}  // namespace

double cos_deg(double deg) {
  double r = reduce_deg(deg);
  double sign = 1.0;
  if (r > 180.0) r = 360.0 - r;
  if (r > 90.0) {
    r = 180.0 - r;  // exact by Sterbenz for r in (90, 180]
    sign = -1.0;
  }
  double c = cos_deg_quadrant(r);
  return c == 0.0 ? 0.0 : sign * c;
}

double sin_deg(double deg) {
  double r = reduce_deg(deg);
  double sign = 1.0;
  if (r > 180.0) {
    r -= 180.0;  // exact by Sterbenz
    sign = -1.0;
  }
  if (r > 90.0) r = 180.0 - r;
  // sin(r) = cos(90 - r); table hits land on the same special angles.
  if (r == 0.0) return 0.0;
  if (r == 30.0) return sign * 0.5;
  if (r == 45.0) return sign * kSqrtHalf;
  if (r == 60.0) return sign * kSqrt3Over2;
  if (r == 90.0) return sign * 1.0;
  return sign * std::sin(deg_to_rad(r));
}

double relative_angle_deg(double theta1_deg, double theta2_deg) {
  double d = reduce_deg(std::fabs(theta1_deg - theta2_deg));
  if (d > 180.0) d = 360.0 - d;
  return d;
}

double canonical_theta(double theta_rad) {
  double r = std::fmod(theta_rad, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r > kPi) r = 2.0 * kPi - r;
  return r;
}

}  // namespace entsim
