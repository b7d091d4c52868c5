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

#include <cmath>

#include "entsim/angles.hpp"
#include "entsim/errors.hpp"
#include "entsim/vec3.hpp"

#include "doctest.h"

using namespace entsim;

TEST_CASE("degree trig is exact at the canonical angles") {
  CHECK(cos_deg(0.0) == 1.0);
  CHECK(cos_deg(60.0) == 0.5);
  CHECK(cos_deg(90.0) == 0.0);
  CHECK(cos_deg(120.0) == -0.5);
  CHECK(cos_deg(180.0) == -1.0);
  CHECK(cos_deg(45.0) == std::sqrt(0.5));
  CHECK(cos_deg(135.0) == -std::sqrt(0.5));
  CHECK(cos_deg(30.0) == std::sqrt(3.0) / 2.0);
  CHECK(sin_deg(0.0) == 0.0);
  CHECK(sin_deg(90.0) == 1.0);
  CHECK(sin_deg(30.0) == 0.5);
  CHECK(sin_deg(150.0) == 0.5);
  CHECK(sin_deg(180.0) == 0.0);
  CHECK(sin_deg(270.0) == -1.0);
  // wrap-around and negatives hit the same table
  CHECK(cos_deg(-60.0) == 0.5);
  CHECK(cos_deg(420.0) == 0.5);
  CHECK(cos_deg(-120.0) == -0.5);
}

TEST_CASE("degree trig agrees with std trig off the table") {
  for (double d = -400.0; d <= 400.0; d += 7.3) {
    CHECK(cos_deg(d) == doctest::Approx(std::cos(deg_to_rad(d))).epsilon(1e-13));
    CHECK(sin_deg(d) == doctest::Approx(std::sin(deg_to_rad(d))).epsilon(1e-13));
  }
}

TEST_CASE("relative angle folds into [0, 180]") {
  CHECK(relative_angle_deg(0.0, 60.0) == 60.0);
  CHECK(relative_angle_deg(60.0, 0.0) == 60.0);
  CHECK(relative_angle_deg(350.0, 10.0) == 20.0);
  CHECK(relative_angle_deg(0.0, 270.0) == 90.0);
  CHECK(relative_angle_deg(45.0, 45.0) == 0.0);
  CHECK(relative_angle_deg(0.0, 180.0) == 180.0);
}

TEST_CASE("canonical_theta wraps and folds radians") {
  CHECK(canonical_theta(0.0) == 0.0);
  CHECK(canonical_theta(kPi) == doctest::Approx(kPi));
  CHECK(canonical_theta(1.5 * kPi) == doctest::Approx(0.5 * kPi));
  CHECK(canonical_theta(-0.25 * kPi) == doctest::Approx(0.25 * kPi));
  CHECK(canonical_theta(2.0 * kPi + 0.1) == doctest::Approx(0.1));
}

TEST_CASE("unit vector validation") {
  CHECK_THROWS_AS(UnitVector3(1.0, 1.0, 0.0), validation_error);
  CHECK_NOTHROW(UnitVector3(0.0, 0.0, 1.0));
  UnitVector3 v = UnitVector3::normalized(3.0, 4.0, 0.0);
  CHECK(v.x == doctest::Approx(0.6));
  CHECK(v.y == doctest::Approx(0.8));
  CHECK_THROWS_AS(UnitVector3::normalized(0.0, 0.0, 0.0), validation_error);
}

TEST_CASE("in-plane axes are exact at the special angles") {
  UnitVector3 a = UnitVector3::in_plane_deg(0.0);
  CHECK(a.x == 0.0);
  CHECK(a.z == 1.0);
  UnitVector3 b = UnitVector3::in_plane_deg(90.0);
  CHECK(b.x == 1.0);
  CHECK(b.z == 0.0);
  UnitVector3 c = UnitVector3::in_plane_deg(60.0);
  CHECK(c.z == 0.5);
  CHECK(dot(a, c) == 0.5);
}

TEST_CASE("angle_between is accurate near the poles") {
  UnitVector3 a = UnitVector3::z_axis();
  CHECK(angle_between(a, a) == 0.0);
  CHECK(angle_between(a, -a) == doctest::Approx(kPi));
  UnitVector3 b = UnitVector3::in_plane_deg(60.0);
  CHECK(angle_between(a, b) == doctest::Approx(deg_to_rad(60.0)).epsilon(1e-15));
}
