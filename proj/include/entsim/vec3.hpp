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

namespace entsim {

/// A measurement axis (Stern-Gerlach direction). Construction rejects vectors
/// whose squared norm deviates from 1 by more than 1e-12.
struct UnitVector3 {
  double x;
  double y;
  double z;

  UnitVector3(double x_, double y_, double z_);

  /// Scale an arbitrary nonzero vector onto the unit sphere.
  static UnitVector3 normalized(double x_, double y_, double z_);

  /// Direction at `theta_deg` degrees from +z inside the z-x plane:
  /// (sin theta, 0, cos theta). Exact at the tabulated special angles, so the
  /// axis for 0 degrees is exactly (0, 0, 1) and for 90 degrees (1, 0, 0).
  static UnitVector3 in_plane_deg(double theta_deg);

  static UnitVector3 x_axis() { return {1.0, 0.0, 0.0}; }
  static UnitVector3 y_axis() { return {0.0, 1.0, 0.0}; }
  static UnitVector3 z_axis() { return {0.0, 0.0, 1.0}; }

  UnitVector3 operator-() const { return {-x, -y, -z}; }
};

double dot(const UnitVector3 &a, const UnitVector3 &b);

/// Angle between two unit vectors in radians, in [0, pi]. Uses the
/// atan2(|a x b|, a.b) form, which stays accurate near 0 and pi.
double angle_between(const UnitVector3 &a, const UnitVector3 &b);

}  // namespace entsim
