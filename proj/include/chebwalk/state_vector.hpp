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
/**
 * @file
 * Complex state vectors over a named register layout.
 *
 * Registers are listed most-significant first, so the flat index of
 * |r0>|r1>...|rk> is ((r0 * d1 + r1) * d2 + ...) with d the register
 * dimensions.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chebwalk/sparse_matrix.hpp"

namespace chebwalk {

/// Tolerance used when a caller-supplied state must have unit norm.
inline constexpr double kUnitNormTolerance = 1e-9;

struct Register {
  std::string name;
  int qubits = 0;

  Index dimension() const { return Index{1} << qubits; }
  bool operator==(const Register &) const = default;
};

class RegisterLayout {
public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<Register> registers);

  /// A single register called "index".
  static RegisterLayout index_register(int qubits);

  const std::vector<Register> &registers() const { return registers_; }
  Index dimension() const;
  int total_qubits() const;
  /// Position of the named register; throws ValidationError if absent.
  std::size_t position(const std::string &name) const;
  bool contains(const std::string &name) const;

  /// Digit of register `pos` inside flat index `flat`.
  Index digit(Index flat, std::size_t pos) const;

  /// New layout with `reg` in front (most significant).
  RegisterLayout prepend(Register reg) const;

  bool operator==(const RegisterLayout &) const = default;

private:
  std::vector<Register> registers_;
};

class StateVector {
public:
  StateVector() = default;
  /// Takes the amplitudes as given; no normalization is applied.
  StateVector(RegisterLayout layout, Eigen::VectorXcd amplitudes);

  static StateVector basis(Index dimension, Index k);
  static StateVector uniform(Index dimension);
  /// (1/sqrt(N)) sum_i |i>|i> over registers "index" and "copy".
  static StateVector maximally_entangled(Index dimension);
  /// Normalizes `amplitudes` over a single index register. Throws
  /// ValidationError for a zero vector or a non-power-of-two length.
  static StateVector normalized(const Eigen::VectorXcd &amplitudes);

  const RegisterLayout &layout() const { return layout_; }
  const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
  Index dimension() const { return static_cast<Index>(amplitudes_.size()); }
  Complex operator[](Index k) const {
    return amplitudes_[static_cast<Eigen::Index>(k)];
  }
  double norm() const { return amplitudes_.norm(); }

  /// Throws ValidationError unless | ||psi|| - 1 | <= kUnitNormTolerance.
  void require_unit_norm(const std::string &what) const;

private:
  RegisterLayout layout_;
  Eigen::VectorXcd amplitudes_;
};

/// <a|b> (conjugate-linear in the first argument).
Complex inner_product(const StateVector &a, const StateVector &b);

/// Zeroes every amplitude whose masked registers are not all |0>. Throws
/// ValidationError when a mask name is not in the layout.
StateVector project_zero(const StateVector &psi,
                         const std::vector<std::string> &mask);

/// Prepends an ancilla register of `qubits` qubits in |0...0>.
StateVector embed_ancilla_zero(const StateVector &psi, int qubits,
                               const std::string &name = "ancilla");

/// A state read from a qvec file together with the norm it had on disk.
struct LoadedState {
  StateVector state;
  double original_norm = 0.0;
};

LoadedState parse_qvec(std::istream &in, const std::string &source = "<stream>");
LoadedState load_state(const std::string &path);
void write_qvec(std::ostream &out, const StateVector &psi);

} // namespace chebwalk
