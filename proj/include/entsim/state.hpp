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

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "entsim/rng.hpp"
#include "entsim/vec3.hpp"

#include "json.hpp"

namespace entsim {

using Complex = std::complex<double>;

/// Absolute tolerance for algebraic identities (norms, hermiticity, unitarity).
inline constexpr double kAlgebraTol = 1e-12;
/// Absolute tolerance for eigenvector residuals.
inline constexpr double kEigenTol = 1e-10;

/// Normalized state of 1 to 3 two-level particles.
///
/// Basis ordering is fixed project-wide: particle 1 occupies the most
/// significant bit of the basis index, and |+> maps to bit 0, |-> to bit 1.
/// For two particles the ordering is therefore (++, +-, -+, --).
class PureState {
 public:
  PureState(int n_particles, std::vector<Complex> amplitudes);

  int n_particles() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex> &amplitudes() const { return amps_; }
  Complex amplitude(std::size_t basis_index) const { return amps_.at(basis_index); }

  /// Amplitudes as [re, im] pairs, for debugging dumps.
  nlohmann::json to_json() const;

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// Dense Hermitian matrix of dimension 2, 4, or 8 (row-major).
class HermitianOperator {
 public:
  HermitianOperator(std::size_t dim, std::vector<Complex> entries);

  static HermitianOperator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex entry(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<Complex> &entries() const { return entries_; }

  std::vector<Complex> apply(const std::vector<Complex> &v) const;

  nlohmann::json to_json() const;

  /// Matrix product. Only meaningful for commuting factors (the result is
  /// validated as Hermitian and construction throws otherwise).
  friend HermitianOperator operator*(const HermitianOperator &a, const HermitianOperator &b);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Kronecker product; the left factor occupies the more significant bits.
HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b);

struct MeasurementResult {
  double outcome;  // +1 or -1
  PureState post_state;
};

/// (1/sqrt(2)) (|+->  - |-+>): amplitudes (0, 1/sqrt2, -1/sqrt2, 0).
PureState singlet_state();

/// (1/sqrt(2)) (|+++> - |--->).
PureState ghz_state();

/// axis . (sigma_x, sigma_y, sigma_z); trace 0, eigenvalues exactly +/-1.
/// Convention: sigma_x|+> = |->, sigma_y|+> = i|->, sigma_z = diag(+1, -1).
HermitianOperator spin_operator(const UnitVector3 &axis);

/// Embed a single-particle operator into an n-particle space, acting on
/// `slot` (1-based, slot 1 = most significant bit) and as identity elsewhere.
HermitianOperator embed(const HermitianOperator &op, int slot, int n_particles);

/// <psi| A |psi>. The imaginary part must vanish to 1e-12 (consistency_error
/// otherwise); the real part is returned.
double expectation(const PureState &state, const HermitianOperator &op);

/// Projective measurement of an involution observable (op^2 = I within
/// 1e-12; unsupported_observable otherwise). Outcome +1 has probability
/// <psi|(I+op)/2|psi>; the post state is the renormalized projection.
/// Consumes exactly one uniform variate.
MeasurementResult measure(const PureState &state, const HermitianOperator &op, RandomStream &rng);

/// Returns the eigenvalue <psi|A|psi> if ||A psi - <A> psi|| <= tol, else
/// nothing.
std::optional<double> is_eigenvector(const PureState &state, const HermitianOperator &op,
                                     double tol);

/// Row-major 2x2 complex matrix, used for local rotations.
using Mat2 = std::array<Complex, 4>;

/// Apply U (x) U to a two-particle state. U must be special-unitary within
/// 1e-12. The singlet is left fixed up to global phase.
PureState rotate_both(const PureState &state, const Mat2 &rotation);

/// |<a|b>|, used to compare states up to global phase.
double fidelity(const PureState &a, const PureState &b);

}  // namespace entsim
