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
#include <complex>
#include <vector>

#include "entsim/angles.hpp"
#include "entsim/errors.hpp"
#include "entsim/rng.hpp"
#include "entsim/state.hpp"

#include "doctest.h"

using namespace entsim;

namespace {

UnitVector3 random_axis(RandomStream &rng) {
  double z = 2.0 * rng.next_uniform() - 1.0;
  double phi = 2.0 * kPi * rng.next_uniform();
  double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVector3::normalized(r * std::cos(phi), r * std::sin(phi), z);
}

Mat2 random_su2(RandomStream &rng) {
  // normalized quaternion -> SU(2)
  double q[4];
  double n2 = 0.0;
  for (double &v : q) {
    v = 2.0 * rng.next_uniform() - 1.0;
    n2 += v * v;
  }
  double n = std::sqrt(n2);
  for (double &v : q) v /= n;
  return {Complex{q[0], q[1]}, Complex{q[2], q[3]}, Complex{-q[2], q[3]}, Complex{q[0], -q[1]}};
}

double norm_of(const std::vector<Complex> &v) {
  double s = 0.0;
  for (const Complex &c : v) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("singlet state amplitudes and norm") {
  PureState s = singlet_state();
  double r = 1.0 / std::sqrt(2.0);
  CHECK(s.n_particles() == 2);
  CHECK(s.amplitude(0) == Complex{0.0, 0.0});
  CHECK(s.amplitude(1) == Complex{r, 0.0});
  CHECK(s.amplitude(2) == Complex{-r, 0.0});
  CHECK(s.amplitude(3) == Complex{0.0, 0.0});
  CHECK(norm_of(s.amplitudes()) == doctest::Approx(1.0).epsilon(1e-14));

  HermitianOperator zz = tensor(spin_operator(UnitVector3::z_axis()),
                                spin_operator(UnitVector3::z_axis()));
  CHECK(expectation(s, zz) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("ghz state amplitudes and the xxx expectation") {
  PureState g = ghz_state();
  double r = 1.0 / std::sqrt(2.0);
  CHECK(g.n_particles() == 3);
  CHECK(g.amplitude(0) == Complex{r, 0.0});
  CHECK(g.amplitude(7) == Complex{-r, 0.0});
  for (std::size_t i = 1; i < 7; ++i) CHECK(g.amplitude(i) == Complex{0.0, 0.0});

  HermitianOperator sx = spin_operator(UnitVector3::x_axis());
  HermitianOperator xxx = tensor(tensor(sx, sx), sx);
  CHECK(expectation(g, xxx) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("pure state validation") {
  CHECK_THROWS_AS(PureState(2, {1.0, 0.0}), validation_error);           // wrong length
  CHECK_THROWS_AS(PureState(1, {1.0, 1.0}), validation_error);           // not normalized
  CHECK_THROWS_AS(PureState(4, std::vector<Complex>(16, 0.25)), validation_error);
}

TEST_CASE("spin operator matches the fixed convention") {
  HermitianOperator sz = spin_operator(UnitVector3::z_axis());
  CHECK(sz.entry(0, 0) == Complex{1.0, 0.0});
  CHECK(sz.entry(1, 1) == Complex{-1.0, 0.0});
  CHECK(sz.entry(0, 1) == Complex{0.0, 0.0});

  HermitianOperator sx = spin_operator(UnitVector3::x_axis());
  CHECK(sx.entry(0, 1) == Complex{1.0, 0.0});
  CHECK(sx.entry(1, 0) == Complex{1.0, 0.0});
  CHECK(sx.entry(0, 0) == Complex{0.0, 0.0});

  // sigma_y |+> = i |->
  HermitianOperator sy = spin_operator(UnitVector3::y_axis());
  std::vector<Complex> plus{1.0, 0.0};
  std::vector<Complex> out = sy.apply(plus);
  CHECK(out[0] == Complex{0.0, 0.0});
  CHECK(out[1] == Complex{0.0, 1.0});

  // sigma_x |+> = |->
  out = sx.apply(plus);
  CHECK(out[0] == Complex{0.0, 0.0});
  CHECK(out[1] == Complex{1.0, 0.0});
}

TEST_CASE("non-unit axes are rejected before they reach the operator") {
  CHECK_THROWS_AS(spin_operator(UnitVector3(0.5, 0.5, 0.5)), validation_error);
}

TEST_CASE("spin operators square to the identity for random axes") {
  RandomStream rng(RandomSeed{31});
  for (int k = 0; k < 50; ++k) {
    HermitianOperator s = spin_operator(random_axis(rng));
    HermitianOperator sq = s * s;
    CHECK(std::abs(sq.entry(0, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(sq.entry(1, 1) - 1.0) <= 1e-12);
    CHECK(std::abs(sq.entry(0, 1)) <= 1e-12);
    CHECK(std::abs(sq.entry(1, 0)) <= 1e-12);
  }
}

TEST_CASE("embed places the operator on the right slot") {
  HermitianOperator id2 = HermitianOperator::identity(2);
  HermitianOperator e = embed(id2, 2, 3);
  CHECK(e.dim() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(e.entry(i, i) == Complex{1.0, 0.0});

  HermitianOperator sz = spin_operator(UnitVector3::z_axis());
  PureState s = singlet_state();
  HermitianOperator prod = embed(sz, 1, 2) * embed(sz, 2, 2);
  CHECK(expectation(s, prod) == doctest::Approx(-1.0).epsilon(1e-13));

  CHECK_THROWS_AS(embed(sz, 0, 2), validation_error);
  CHECK_THROWS_AS(embed(sz, 3, 2), validation_error);
  CHECK_THROWS_AS(embed(HermitianOperator::identity(4), 1, 2), validation_error);

  // embedded product on the GHZ state reproduces the +1 eigenvalue
  HermitianOperator sx = spin_operator(UnitVector3::x_axis());
  HermitianOperator sy = spin_operator(UnitVector3::y_axis());
  HermitianOperator xyy = embed(sx, 1, 3) * embed(sy, 2, 3) * embed(sy, 3, 3);
  std::optional<double> ev = is_eigenvector(ghz_state(), xyy, 1e-10);
  REQUIRE(ev.has_value());
  CHECK(*ev == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation validates dimensions and realness") {
  PureState s = singlet_state();
  CHECK_THROWS_AS(expectation(s, HermitianOperator::identity(8)), validation_error);

  HermitianOperator zx = tensor(spin_operator(UnitVector3::z_axis()),
                                spin_operator(UnitVector3::x_axis()));
  CHECK(std::fabs(expectation(s, zx)) <= 1e-12);  // orthogonal axes

  UnitVector3 a = UnitVector3::in_plane_deg(0.0);
  UnitVector3 b = UnitVector3::in_plane_deg(60.0);
  HermitianOperator ab = tensor(spin_operator(a), spin_operator(b));
  CHECK(expectation(s, ab) == doctest::Approx(-0.5).epsilon(1e-13));
}

TEST_CASE("singlet correlation equals -a.b for 200 random axis pairs") {
  PureState s = singlet_state();
  RandomStream rng(RandomSeed{202});
  for (int k = 0; k < 200; ++k) {
    UnitVector3 a = random_axis(rng);
    UnitVector3 b = random_axis(rng);
    HermitianOperator op = tensor(spin_operator(a), spin_operator(b));
    CHECK(std::fabs(expectation(s, op) - (-dot(a, b))) <= 1e-12);
  }
}

TEST_CASE("measure on an eigenstate is deterministic") {
  PureState plus(1, {1.0, 0.0});
  RandomStream rng(RandomSeed{5});
  for (int k = 0; k < 20; ++k) {
    MeasurementResult r = measure(plus, spin_operator(UnitVector3::z_axis()), rng);
    CHECK(r.outcome == 1.0);
    CHECK(std::abs(r.post_state.amplitude(0) - Complex{1.0, 0.0}) <= 1e-12);
  }
  CHECK(rng.variates_consumed() == 20);  // exactly one variate per measurement
}

TEST_CASE("measuring the singlet along z leaves the partner opposite") {
  PureState s = singlet_state();
  HermitianOperator z1 = embed(spin_operator(UnitVector3::z_axis()), 1, 2);
  HermitianOperator z2 = embed(spin_operator(UnitVector3::z_axis()), 2, 2);
  RandomStream rng(RandomSeed{17});
  int plus = 0, minus = 0;
  for (int k = 0; k < 400; ++k) {
    MeasurementResult r = measure(s, z1, rng);
    (r.outcome > 0 ? plus : minus)++;
    // partner is in the opposite z eigenstate: <z2> = -outcome
    CHECK(expectation(r.post_state, z2) == doctest::Approx(-r.outcome).epsilon(1e-12));
    std::optional<double> ev = is_eigenvector(r.post_state, z1, 1e-10);
    REQUIRE(ev.has_value());
    CHECK(*ev == doctest::Approx(r.outcome));
  }
  // both outcomes occur, roughly evenly (400 fair coins)
  CHECK(plus >= 140);
  CHECK(minus >= 140);
}

TEST_CASE("sequential measurements reproduce the exact correlation") {
  // Monte Carlo through measure() against the exact expectation oracle.
  PureState s = singlet_state();
  UnitVector3 a = UnitVector3::in_plane_deg(20.0);
  UnitVector3 b = UnitVector3::in_plane_deg(135.0);
  HermitianOperator oa = embed(spin_operator(a), 1, 2);
  HermitianOperator ob = embed(spin_operator(b), 2, 2);
  double exact = expectation(s, embed(spin_operator(a), 1, 2) * embed(spin_operator(b), 2, 2));

  RandomStream rng(RandomSeed{23});
  const int n = 40000;
  double sum = 0.0, sumsq = 0.0;
  for (int k = 0; k < n; ++k) {
    MeasurementResult first = measure(s, oa, rng);
    MeasurementResult second = measure(first.post_state, ob, rng);
    double v = first.outcome * second.outcome;
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / n;
  double se = std::sqrt((sumsq - sum * sum / n) / (n - 1.0) / n);
  CHECK(std::fabs(mean - exact) <= 3.0 * se);
}

TEST_CASE("measure rejects non-involution observables") {
  PureState plus(1, {1.0, 0.0});
  HermitianOperator not_involution(2, {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                                       Complex{0.5, 0.0}});
  RandomStream rng(RandomSeed{1});
  CHECK_THROWS_AS(measure(plus, not_involution, rng), unsupported_observable);
}

TEST_CASE("is_eigenvector on the ghz observables and a non-eigenvector") {
  PureState g = ghz_state();
  HermitianOperator sx = spin_operator(UnitVector3::x_axis());
  HermitianOperator sy = spin_operator(UnitVector3::y_axis());

  std::optional<double> ev = is_eigenvector(g, tensor(tensor(sy, sx), sy), 1e-10);
  REQUIRE(ev.has_value());
  CHECK(*ev == doctest::Approx(1.0));

  ev = is_eigenvector(g, tensor(tensor(sx, sx), sx), 1e-10);
  REQUIRE(ev.has_value());
  CHECK(*ev == doctest::Approx(-1.0));

  // direct matrix-vector oracle: A psi is not proportional to psi
  PureState s = singlet_state();
  HermitianOperator zx = tensor(spin_operator(UnitVector3::z_axis()),
                                spin_operator(UnitVector3::x_axis()));
  std::vector<Complex> av = zx.apply(s.amplitudes());
  double lambda = expectation(s, zx);
  double res = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    res += std::norm(av[i] - lambda * s.amplitudes()[i]);
  }
  CHECK(std::sqrt(res) > 0.5);  // far from any eigenvector
  CHECK(!is_eigenvector(s, zx, 1e-10).has_value());

  CHECK_THROWS_AS(is_eigenvector(s, zx, 0.0), validation_error);
  CHECK_THROWS_AS(is_eigenvector(g, zx, 1e-10), validation_error);
}

TEST_CASE("the four ghz observables commute and share the ghz eigenvector") {
  HermitianOperator sx = spin_operator(UnitVector3::x_axis());
  HermitianOperator sy = spin_operator(UnitVector3::y_axis());
  std::vector<HermitianOperator> obs{
      tensor(tensor(sx, sy), sy), tensor(tensor(sy, sx), sy), tensor(tensor(sy, sy), sx),
      tensor(tensor(sx, sx), sx)};
  for (std::size_t i = 0; i < obs.size(); ++i) {
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      HermitianOperator ab = obs[i] * obs[j];
      HermitianOperator ba = obs[j] * obs[i];
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
          CHECK(std::abs(ab.entry(r, c) - ba.entry(r, c)) <= 1e-12);
    }
  }
  PureState g = ghz_state();
  double expected[4] = {1.0, 1.0, 1.0, -1.0};
  for (int i = 0; i < 4; ++i) {
    std::optional<double> ev = is_eigenvector(g, obs[i], 1e-10);
    REQUIRE(ev.has_value());
    CHECK(*ev == doctest::Approx(expected[i]));
  }
}

TEST_CASE("rotate_both fixes the singlet up to phase") {
  PureState s = singlet_state();
  Mat2 id{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
  PureState same = rotate_both(s, id);
  for (std::size_t i = 0; i < 4; ++i) CHECK(same.amplitude(i) == s.amplitude(i));

  RandomStream rng(RandomSeed{14});
  for (int k = 0; k < 100; ++k) {
    PureState out = rotate_both(s, random_su2(rng));
    CHECK(std::fabs(fidelity(out, s) - 1.0) <= 1e-10);
    CHECK(norm_of(out.amplitudes()) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("rotating |++> by pi about y gives |--> up to phase") {
  // oracle: build U (x) U explicitly and apply it by hand
  Mat2 u{Complex{0.0, 0.0}, Complex{-1.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 0.0}};
  PureState pp(2, {1.0, 0.0, 0.0, 0.0});

  Complex uu[4][4];
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) uu[i1 * 2 + i2][j1 * 2 + j2] = u[i1 * 2 + j1] * u[i2 * 2 + j2];
  Complex expect[4] = {};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expect[i] += uu[i][j] * pp.amplitude(j);

  PureState out = rotate_both(pp, u);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(out.amplitude(i) - expect[i]) <= 1e-12);
  PureState mm(2, {0.0, 0.0, 0.0, 1.0});
  CHECK(std::fabs(fidelity(out, mm) - 1.0) <= 1e-12);
}

TEST_CASE("rotate_both validates its input") {
  PureState s = singlet_state();
  Mat2 not_unitary{Complex{2.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{0.5, 0.0}};
  CHECK_THROWS_AS(rotate_both(s, not_unitary), validation_error);
  // unitary but det = -1
  Mat2 det_minus{Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 0.0}};
  CHECK_THROWS_AS(rotate_both(s, det_minus), validation_error);
  PureState one(1, {1.0, 0.0});
  Mat2 id{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
  CHECK_THROWS_AS(rotate_both(one, id), validation_error);
}

TEST_CASE("measurement post-states are eigenvectors across random settings") {
  PureState s = singlet_state();
  RandomStream rng(RandomSeed{57});
  for (int k = 0; k < 100; ++k) {
    int slot = rng.next_uniform() < 0.5 ? 1 : 2;
    HermitianOperator op = embed(spin_operator(random_axis(rng)), slot, 2);
    MeasurementResult r = measure(s, op, rng);
    CHECK(norm_of(r.post_state.amplitudes()) == doctest::Approx(1.0).epsilon(1e-13));
    std::optional<double> ev = is_eigenvector(r.post_state, op, 1e-10);
    REQUIRE(ev.has_value());
    CHECK(*ev == doctest::Approx(r.outcome));
  }
}

TEST_CASE("hermiticity is enforced") {
  CHECK_THROWS_AS(HermitianOperator(2, {Complex{0.0, 0.0}, Complex{1.0, 0.0},
                                        Complex{2.0, 0.0}, Complex{0.0, 0.0}}),
                  validation_error);
  CHECK_THROWS_AS(HermitianOperator(3, std::vector<Complex>(9, 0.0)), validation_error);
}

TEST_CASE("json dumps carry [re, im] pairs") {
  nlohmann::json j = singlet_state().to_json();
  CHECK(j["n_particles"] == 2);
  CHECK(j["amplitudes"].size() == 4);
  CHECK(j["amplitudes"][1][0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(j["amplitudes"][1][1] == 0.0);

  nlohmann::json op = spin_operator(UnitVector3::y_axis()).to_json();
  CHECK(op["dim"] == 2);
  CHECK(op["entries"][0][1][1] == -1.0);  // (0,1) entry is -i
}
