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

#include <numbers>

namespace entsim {

inline constexpr double kPi = std::numbers::pi;

inline constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Degree-based trig. Reduction mod 360 and the quadrant folds are exact for
/// integer-degree inputs, and the values at multiples of 30 and 45 degrees come
/// from a table of correctly rounded constants, so e.g. cos_deg(60) == 0.5 and
/// cos_deg(120) == -0.5 hold bit-exactly. Other angles fall through to
/// std::sin/std::cos on the radian image.
double sin_deg(double deg);
double cos_deg(double deg);

/// Relative angle between two coplanar directions given by their angles in
/// degrees, folded into [0, 180]. Exact for integer inputs.
double relative_angle_deg(double theta1_deg, double theta2_deg);

/// Canonicalize an angle in radians into [0, pi] (wrap mod 2*pi, then fold).
double canonical_theta(double theta_rad);

}  // namespace entsim
