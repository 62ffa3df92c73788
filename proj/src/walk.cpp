// Copyright 2026 The chebwalk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "chebwalk/walk.hpp"

#include <cmath>
#include <sstream>

#include "chebwalk/error.hpp"

namespace chebwalk {

namespace {

constexpr double kIsometryCheckTolerance = 1e-8;

Eigen::Index as_eigen(Index k) { return static_cast<Eigen::Index>(k); }

} // namespace

WalkSpace::WalkSpace(Index n)
    : base_dimension(n), index_qubits(log2_exact(n)) {
  if (!is_power_of_two(n)) {
    throw ValidationError("walk space needs a power-of-two dimension, got " +
                          std::to_string(n));
  }
}

RegisterLayout WalkSpace::walk_layout() const {
  return RegisterLayout({{"row", index_qubits + 1}, {"col", index_qubits + 1}});
}

RegisterLayout WalkSpace::ancilla_layout() const {
  return RegisterLayout({{"ancilla", ancilla_qubits()}, {"index", index_qubits}});
}

Complex walk_amplitude(const SparseHermitianMatrix &a, Index j, Index k) {
  const Complex value = a.entry(j, k);
  if (value == Complex(0.0, 0.0)) {
    return {0.0, 0.0};
  }
  if (j <= k) {
    return std::sqrt(std::conj(value));
  }
  // Lower member of an off-diagonal pair: fixed by the upper partner so that
  // conj(r_jk) * r_kj = a_jk on every branch.
  const Complex partner = std::sqrt(std::conj(a.entry(k, j)));
  return std::conj(value) / std::conj(partner);
}

StateVector build_psi_state(const SparseHermitianMatrix &a, Index j) {
  const WalkSpace space(a.dimension());
  if (j >= a.dimension()) {
    throw ValidationError("row " + std::to_string(j) + " is out of range");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(a.sparsity()));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(as_eigen(space.dimension()));
  for (Index k : a.padded_pattern(j)) {
    v[as_eigen(space.walk_flat(j, k))] = scale * walk_amplitude(a, j, k);
    v[as_eigen(space.walk_flat(j, k + a.dimension()))] =
        scale * std::sqrt(1.0 - std::min(1.0, std::abs(a.entry(j, k))));
  }
  return {space.walk_layout(), std::move(v)};
}

WalkOperator::WalkOperator(SparseHermitianMatrix a)
    : matrix_(std::move(a)), space_(matrix_.dimension()) {
  const Index n = matrix_.dimension();
  const double scale = 1.0 / std::sqrt(static_cast<double>(matrix_.sparsity()));

  columns_.resize(n);
  swap_flip_.assign(n, false);
  for (Index j = 0; j < n; ++j) {
    for (Index k : matrix_.padded_pattern(j)) {
      const Complex amp = walk_amplitude(matrix_, j, k);
      const double rest = std::sqrt(1.0 - std::min(1.0, std::abs(matrix_.entry(j, k))));
      if (amp != Complex(0.0, 0.0)) {
        columns_[j].push_back({space_.walk_flat(j, k), scale * amp});
      }
      if (rest != 0.0) {
        columns_[j].push_back({space_.walk_flat(j, k + n), Complex(scale * rest, 0.0)});
      }
    }
    swap_flip_[j] = matrix_.entry(j, j).real() < 0.0;
  }

  qr_.compute(isometry_matrix());
  const auto cols = as_eigen(n);
  const Eigen::MatrixXcd r =
      qr_.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  column_phases_ = r.diagonal();
  double worst = 0.0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    worst = std::max(worst, std::abs(std::abs(r(c, c)) - 1.0));
    for (Eigen::Index row = 0; row < c; ++row) {
      worst = std::max(worst, std::abs(r(row, c)));
    }
  }
  if (worst > kIsometryCheckTolerance) {
    std::ostringstream os;
    os << "orthonormal completion failed: T is not an isometry (deviation "
       << worst << ")";
    throw NumericalError(os.str());
  }
}

std::span<const SparseAmplitude> WalkOperator::psi(Index j) const {
  if (j >= columns_.size()) {
    throw ValidationError("row " + std::to_string(j) + " is out of range");
  }
  return columns_[j];
}

void WalkOperator::require_length(const Eigen::VectorXcd &v, Index expected,
                                  const char *what) const {
  if (static_cast<Index>(v.size()) != expected) {
    throw ValidationError(std::string(what) + ": expected a vector of length " +
                          std::to_string(expected) + ", got " +
                          std::to_string(v.size()));
  }
}

void WalkOperator::require_dense_size(const char *what) const {
  if (space_.dimension() > kDenseLimit) {
    throw ValidationError(std::string(what) + ": walk space of dimension " +
                          std::to_string(space_.dimension()) +
                          " is too large to materialize");
  }
}

Eigen::VectorXcd WalkOperator::apply_isometry(const Eigen::VectorXcd &phi) const {
  require_length(phi, space_.base_dimension, "apply_isometry");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(as_eigen(space_.dimension()));
  for (Index j = 0; j < columns_.size(); ++j) {
    const Complex c = phi[as_eigen(j)];
    if (c == Complex(0.0, 0.0)) {
      continue;
    }
    for (const SparseAmplitude &e : columns_[j]) {
      out[as_eigen(e.flat)] += e.value * c;
    }
  }
  return out;
}

Eigen::VectorXcd WalkOperator::apply_isometry_adjoint(const Eigen::VectorXcd &v) const {
  require_length(v, space_.dimension(), "apply_isometry_adjoint");
  Eigen::VectorXcd out(as_eigen(space_.base_dimension));
  for (Index j = 0; j < columns_.size(); ++j) {
    Complex acc(0.0, 0.0);
    for (const SparseAmplitude &e : columns_[j]) {
      acc += std::conj(e.value) * v[as_eigen(e.flat)];
    }
    out[as_eigen(j)] = acc;
  }
  return out;
}

Eigen::VectorXcd WalkOperator::apply_swap(const Eigen::VectorXcd &v) const {
  require_length(v, space_.dimension(), "apply_swap");
  const Index d = space_.factor_dimension();
  Eigen::VectorXcd out(v.size());
  for (Index x = 0; x < d; ++x) {
    for (Index y = 0; y < d; ++y) {
      out[as_eigen(space_.walk_flat(y, x))] = v[as_eigen(space_.walk_flat(x, y))];
    }
  }
  for (Index j = 0; j < space_.base_dimension; ++j) {
    if (swap_flip_[j]) {
      out[as_eigen(space_.walk_flat(j, j))] *= -1.0;
    }
  }
  return out;
}

Eigen::VectorXcd WalkOperator::apply_walk(const Eigen::VectorXcd &v) const {
  Eigen::VectorXcd reflected = 2.0 * apply_isometry(apply_isometry_adjoint(v)) - v;
  return apply_swap(reflected);
}

Eigen::VectorXcd WalkOperator::apply_walk_adjoint(const Eigen::VectorXcd &v) const {
  const Eigen::VectorXcd swapped = apply_swap(v);
  return 2.0 * apply_isometry(apply_isometry_adjoint(swapped)) - swapped;
}

Eigen::VectorXcd WalkOperator::apply_completion(const Eigen::VectorXcd &v) const {
  require_length(v, space_.dimension(), "apply_completion");
  Eigen::VectorXcd w = v;
  const auto n = as_eigen(space_.base_dimension);
  w.head(n) = w.head(n).cwiseProduct(column_phases_);
  return qr_.householderQ() * w;
}

Eigen::VectorXcd WalkOperator::apply_completion_adjoint(const Eigen::VectorXcd &v) const {
  require_length(v, space_.dimension(), "apply_completion_adjoint");
  Eigen::VectorXcd w = qr_.householderQ().adjoint() * v;
  const auto n = as_eigen(space_.base_dimension);
  w.head(n) = w.head(n).cwiseProduct(column_phases_.conjugate());
  return w;
}

Eigen::VectorXcd WalkOperator::apply_block_encoding(int order,
                                                    const Eigen::VectorXcd &phi) const {
  if (order < 0) {
    throw ValidationError("Chebyshev order must be non-negative, got " +
                          std::to_string(order));
  }
  require_length(phi, space_.base_dimension, "apply_block_encoding");
  if (order == 0) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(as_eigen(space_.dimension()));
    out.head(phi.size()) = phi;
    return out;
  }
  Eigen::VectorXcd w = apply_isometry(phi);
  for (int step = 0; step < order; ++step) {
    w = apply_walk(w);
  }
  return apply_completion_adjoint(w);
}

Eigen::MatrixXcd WalkOperator::isometry_matrix() const {
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(as_eigen(space_.dimension()),
                                              as_eigen(space_.base_dimension));
  for (Index j = 0; j < columns_.size(); ++j) {
    for (const SparseAmplitude &e : columns_[j]) {
      t(as_eigen(e.flat), as_eigen(j)) = e.value;
    }
  }
  return t;
}

Eigen::MatrixXcd WalkOperator::swap_matrix() const {
  require_dense_size("swap_matrix");
  const auto d = as_eigen(space_.dimension());
  Eigen::MatrixXcd s(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    s.col(c) = apply_swap(Eigen::VectorXcd::Unit(d, c));
  }
  return s;
}

Eigen::MatrixXcd WalkOperator::walk_matrix() const {
  require_dense_size("walk_matrix");
  const Eigen::MatrixXcd t = isometry_matrix();
  const auto d = as_eigen(space_.dimension());
  return swap_matrix() *
         (2.0 * t * t.adjoint() - Eigen::MatrixXcd::Identity(d, d));
}

Eigen::MatrixXcd WalkOperator::completion_matrix() const {
  require_dense_size("completion_matrix");
  Eigen::MatrixXcd u = qr_.householderQ();
  const auto n = as_eigen(space_.base_dimension);
  for (Eigen::Index c = 0; c < n; ++c) {
    u.col(c) *= column_phases_[c];
  }
  return u;
}

WalkOperator build_walk_operator(const SparseHermitianMatrix &a) {
  return WalkOperator(a);
}

BlockApplication chebyshev_block_apply(const WalkOperator &walk, int order,
                                       const StateVector &phi) {
  const auto &regs = phi.layout().registers();
  const WalkSpace &space = walk.space();
  if (regs.empty() || regs.front().name != "index" ||
      regs.front().qubits != space.index_qubits) {
    throw ValidationError(
        "block encoding input must start with an 'index' register of " +
        std::to_string(space.index_qubits) + " qubits");
  }
  const Index n = space.base_dimension;
  const Index copies = phi.dimension() / n;
  const Index out_dim = space.dimension() * copies;

  Eigen::VectorXcd out(as_eigen(out_dim));
  Eigen::VectorXcd column(as_eigen(n));
  for (Index c = 0; c < copies; ++c) {
    for (Index i = 0; i < n; ++i) {
      column[as_eigen(i)] = phi[i * copies + c];
    }
    const Eigen::VectorXcd image = walk.apply_block_encoding(order, column);
    for (Index r = 0; r < space.dimension(); ++r) {
      out[as_eigen(r * copies + c)] = image[as_eigen(r)];
    }
  }

  const auto head = as_eigen(n * copies);
  StateVector projected(phi.layout(), out.head(head));
  const double garbage = out.tail(as_eigen(out_dim) - head).norm();
  return {StateVector(phi.layout().prepend({"ancilla", space.ancilla_qubits()}),
                      std::move(out)),
          std::move(projected), garbage};
}

BlockApplication chebyshev_block_apply(const SparseHermitianMatrix &a,
                                       int order, const StateVector &phi) {
  return chebyshev_block_apply(WalkOperator(a), order, phi);
}

double chebyshev_first_kind(int n, double x) {
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_second_kind(int n, double x) {
  if (n < 0) {
    return 0.0; // U_{-1} = 0
  }
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace chebwalk
