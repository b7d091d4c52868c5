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

#include "entsim/state.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "entsim/errors.hpp"

namespace entsim {

namespace {

double norm2(const std::vector<Complex> &v) {
  double s = 0.0;
  for (const Complex &c : v) s += std::norm(c);
  return s;
}

Complex inner(const std::vector<Complex> &a, const std::vector<Complex> &b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

PureState::PureState(int n_particles, std::vector<Complex> amplitudes)
    : n_(n_particles), amps_(std::move(amplitudes)) {
  if (n_ < 1 || n_ > 3) {
    throw validation_error("PureState: n_particles must be 1, 2, or 3");
  }
  if (amps_.size() != (std::size_t{1} << n_)) {
    throw validation_error("PureState: expected 2^n amplitudes, got " +
                           std::to_string(amps_.size()));
  }
  if (std::fabs(std::sqrt(norm2(amps_)) - 1.0) > kAlgebraTol) {
    throw validation_error("PureState: amplitudes are not normalized");
  }
}

nlohmann::json PureState::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Complex &c : amps_) arr.push_back({c.real(), c.imag()});
  return nlohmann::json{{"n_particles", n_}, {"amplitudes", arr}};
}

HermitianOperator::HermitianOperator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ != 2 && dim_ != 4 && dim_ != 8) {
    throw validation_error("HermitianOperator: dim must be 2, 4, or 8");
  }
  if (entries_.size() != dim_ * dim_) {
    throw validation_error("HermitianOperator: entry count does not match dim");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (std::abs(entries_[i * dim_ + j] - std::conj(entries_[j * dim_ + i])) > kAlgebraTol) {
        throw validation_error("HermitianOperator: matrix is not Hermitian");
      }
    }
  }
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return {dim, std::move(e)};
}

std::vector<Complex> HermitianOperator::apply(const std::vector<Complex> &v) const {
  if (v.size() != dim_) throw validation_error("HermitianOperator::apply: dimension mismatch");
  std::vector<Complex> out(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += entries_[i * dim_ + j] * v[j];
    out[i] = s;
  }
  return out;
}

nlohmann::json HermitianOperator::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < dim_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < dim_; ++j) {
      const Complex &c = entries_[i * dim_ + j];
      row.push_back({c.real(), c.imag()});
    }
    rows.push_back(row);
  }
  return nlohmann::json{{"dim", dim_}, {"entries", rows}};
}

HermitianOperator operator*(const HermitianOperator &a, const HermitianOperator &b) {
  if (a.dim_ != b.dim_) throw validation_error("operator*: dimension mismatch");
  std::size_t d = a.dim_;
  std::vector<Complex> out(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      Complex aik = a.entries_[i * d + k];
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < d; ++j) {
        out[i * d + j] += aik * b.entries_[k * d + j];
      }
    }
  }
  return {d, std::move(out)};
}

HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b) {
  std::size_t da = a.dim(), db = b.dim();
  std::size_t d = da * db;
  if (d > 8) throw validation_error("tensor: result dimension exceeds 8");
  std::vector<Complex> out(d * d);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < da; ++j1)
      for (std::size_t i2 = 0; i2 < db; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2)
          out[(i1 * db + i2) * d + (j1 * db + j2)] = a.entry(i1, j1) * b.entry(i2, j2);
  return {d, std::move(out)};
}

PureState singlet_state() {
  double r = 1.0 / std::sqrt(2.0);
  return {2, {0.0, Complex{r, 0.0}, Complex{-r, 0.0}, 0.0}};
}

PureState ghz_state() {
  double r = 1.0 / std::sqrt(2.0);
  std::vector<Complex> amps(8, 0.0);
  amps[0] = Complex{r, 0.0};
  amps[7] = Complex{-r, 0.0};
  return {3, std::move(amps)};
}

HermitianOperator spin_operator(const UnitVector3 &axis) {
  // [[ z, x - iy], [x + iy, -z]] in the (|+>, |->) basis.
  return {2,
          {Complex{axis.z, 0.0}, Complex{axis.x, -axis.y}, Complex{axis.x, axis.y},
           Complex{-axis.z, 0.0}}};
}

HermitianOperator embed(const HermitianOperator &op, int slot, int n_particles) {
  if (op.dim() != 2) throw validation_error("embed: operator must be single-particle (dim 2)");
  if (n_particles < 1 || n_particles > 3) {
    throw validation_error("embed: n_particles must be 1, 2, or 3");
  }
  if (slot < 1 || slot > n_particles) {
    throw validation_error("embed: slot " + std::to_string(slot) + " out of range for " +
                           std::to_string(n_particles) + " particles");
  }
  HermitianOperator out = (slot == 1) ? op : HermitianOperator::identity(2);
  for (int k = 2; k <= n_particles; ++k) {
    out = tensor(out, (k == slot) ? op : HermitianOperator::identity(2));
  }
  return out;
}

double expectation(const PureState &state, const HermitianOperator &op) {
  if (state.dim() != op.dim()) throw validation_error("expectation: dimension mismatch");
  Complex v = inner(state.amplitudes(), op.apply(state.amplitudes()));
  if (std::fabs(v.imag()) > kAlgebraTol) {
    throw consistency_error("expectation: imaginary part " + std::to_string(v.imag()) +
                            " exceeds tolerance");
  }
  return v.real();
}

namespace {

bool is_involution(const HermitianOperator &op) {
  HermitianOperator sq = op * op;
  for (std::size_t i = 0; i < op.dim(); ++i) {
    for (std::size_t j = 0; j < op.dim(); ++j) {
      Complex want = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(sq.entry(i, j) - want) > kAlgebraTol) return false;
    }
  }
  return true;
}

}  // namespace

MeasurementResult measure(const PureState &state, const HermitianOperator &op, RandomStream &rng) {
  if (state.dim() != op.dim()) throw validation_error("measure: dimension mismatch");
  if (!is_involution(op)) {
    throw unsupported_observable(
        "measure: observable is not an involution (outcomes must be +1/-1)");
  }
  double p_plus = 0.5 * (1.0 + expectation(state, op));
  if (p_plus < 0.0) p_plus = 0.0;
  if (p_plus > 1.0) p_plus = 1.0;

  double u = rng.next_uniform();
  double outcome = (u < p_plus) ? 1.0 : -1.0;

  // post = (I + outcome*op)/2 |psi>, renormalized
  std::vector<Complex> proj = op.apply(state.amplitudes());
  for (std::size_t i = 0; i < proj.size(); ++i) {
    proj[i] = 0.5 * (state.amplitudes()[i] + outcome * proj[i]);
  }
  double nrm = std::sqrt(norm2(proj));
  if (nrm == 0.0) {
    throw consistency_error("measure: selected branch has zero probability");
  }
  for (Complex &c : proj) c /= nrm;
  return {outcome, PureState(state.n_particles(), std::move(proj))};
}

std::optional<double> is_eigenvector(const PureState &state, const HermitianOperator &op,
                                     double tol) {
  if (state.dim() != op.dim()) throw validation_error("is_eigenvector: dimension mismatch");
  if (!(tol > 0.0)) throw validation_error("is_eigenvector: tol must be positive");
  double lambda = expectation(state, op);
  std::vector<Complex> r = op.apply(state.amplitudes());
  double res2 = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    res2 += std::norm(r[i] - lambda * state.amplitudes()[i]);
  }
  if (std::sqrt(res2) <= tol) return lambda;
  return std::nullopt;
}

PureState rotate_both(const PureState &state, const Mat2 &u) {
  if (state.n_particles() != 2) {
    throw validation_error("rotate_both: state must have exactly 2 particles");
  }
  // unitarity: U U^dagger = I
  Complex r00 = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
  Complex r01 = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
  Complex r11 = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
  Complex det = u[0] * u[3] - u[1] * u[2];
  if (std::abs(r00 - 1.0) > kAlgebraTol || std::abs(r11 - 1.0) > kAlgebraTol ||
      std::abs(r01) > kAlgebraTol) {
    throw validation_error("rotate_both: matrix is not unitary");
  }
  if (std::abs(det - 1.0) > kAlgebraTol) {
    throw validation_error("rotate_both: determinant is not 1");
  }

  const std::vector<Complex> &a = state.amplitudes();
  std::vector<Complex> out(4, 0.0);
  // (U (x) U)[i1 i2, j1 j2] = U[i1,j1] U[i2,j2]; unitarity keeps the norm, so
  // no renormalization (the identity rotation must return the state bit-exact)
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
          out[i1 * 2 + i2] += u[i1 * 2 + j1] * u[i2 * 2 + j2] * a[j1 * 2 + j2];
  return {2, std::move(out)};
}

double fidelity(const PureState &a, const PureState &b) {
  if (a.dim() != b.dim()) throw validation_error("fidelity: dimension mismatch");
  return std::abs(inner(a.amplitudes(), b.amplitudes()));
}

}  // namespace entsim
