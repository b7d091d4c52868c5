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

#include "entsim/vec3.hpp"

#include <cmath>
#include <string>

#include "entsim/angles.hpp"
#include "entsim/errors.hpp"

namespace entsim {

UnitVector3::UnitVector3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  double n2 = x * x + y * y + z * z;
  if (std::fabs(n2 - 1.0) > 1e-12) {
    throw validation_error("UnitVector3: squared norm " + std::to_string(n2) +
                           " deviates from 1 by more than 1e-12");
  }
}

UnitVector3 UnitVector3::normalized(double x_, double y_, double z_) {
  double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
  if (n == 0.0 || !std::isfinite(n)) {
    throw validation_error("UnitVector3::normalized: vector has no direction");
  }
  return {x_ / n, y_ / n, z_ / n};
}

UnitVector3 UnitVector3::in_plane_deg(double theta_deg) {
  return {sin_deg(theta_deg), 0.0, cos_deg(theta_deg)};
}

double dot(const UnitVector3 &a, const UnitVector3 &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double angle_between(const UnitVector3 &a, const UnitVector3 &b) {
  double cx = a.y * b.z - a.z * b.y;
  double cy = a.z * b.x - a.x * b.z;
  double cz = a.x * b.y - a.y * b.x;
  double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
  return std::atan2(cross, dot(a, b));
}

}  // namespace entsim
