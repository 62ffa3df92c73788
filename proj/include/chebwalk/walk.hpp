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
 * Quantum-walk block encoding of a sparse Hermitian matrix A.
 *
 * The walk lives on C^{2N} (x) C^{2N}. Row j of A defines
 *
 *   |psi_j> = |j> (x) s^{-1/2} sum_{k in pattern(j)}
 *               ( sqrt(a_jk^*) |k> + sqrt(1 - |a_jk|) |k + N> ),
 *
 * T = sum_j |psi_j><j| is an isometry, W = S (2 T T^dagger - I), and
 * T^dagger W^n T = T_n(A/s) (Chebyshev polynomial of the first kind). The
 * block encoding U_n = U_T^dagger W^n U_T uses any unitary completion U_T
 * of T, so that <0^m| U_n |0^m> = T_n(A/s).
 *
 * Two details keep T^dagger S T = A/s exact for every Hermitian A:
 *  - square roots use the principal branch, except that for a pair (j,k)
 *    with j > k the amplitude is chosen as conj(a_jk) / conj(r_kj) where r_kj
 *    is the partner's amplitude. This only differs from the principal branch
 *    on the negative real axis, where the principal branch would give
 *    |a_jk| instead of a_jk.
 *  - a negative diagonal entry a_jj contributes |sqrt(a_jj)|^2 = |a_jj| to
 *    <psi_j|S|psi_j>, so S carries a -1 on the fixed point |j,j> for those
 *    rows. S stays a Hermitian involution.
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/QR>

#include "chebwalk/sparse_matrix.hpp"
#include "chebwalk/state_vector.hpp"

namespace chebwalk {

/// Dimension bookkeeping for the walk space. The same flat index serves
/// both factorizations:
///   walk:    flat = x * 2N + y,       x, y in [0, 2N)
///   ancilla: flat = a * N + i,        a in [0, 2^m), i in [0, N)
/// so |0^m>|phi> occupies flat indices [0, N), i.e. x = 0, y = i.
struct WalkSpace {
  Index base_dimension = 0;
  int index_qubits = 0;

  explicit WalkSpace(Index n);

  int ancilla_qubits() const { return index_qubits + 2; }
  Index factor_dimension() const { return 2 * base_dimension; }
  Index dimension() const { return factor_dimension() * factor_dimension(); }
  Index ancilla_dimension() const { return Index{4} * base_dimension; }

  Index walk_flat(Index x, Index y) const { return x * factor_dimension() + y; }
  std::pair<Index, Index> walk_coords(Index flat) const {
    return {flat / factor_dimension(), flat % factor_dimension()};
  }
  Index ancilla_flat(Index a, Index i) const { return a * base_dimension + i; }
  std::pair<Index, Index> ancilla_coords(Index flat) const {
    return {flat / base_dimension, flat % base_dimension};
  }

  /// ("row", n+1) (x) ("col", n+1).
  RegisterLayout walk_layout() const;
  /// ("ancilla", m) (x) ("index", n).
  RegisterLayout ancilla_layout() const;
};

struct SparseAmplitude {
  Index flat = 0;
  Complex value;
};

/// Amplitude of |j>|k> in |psi_j> before the 1/sqrt(s) factor.
Complex walk_amplitude(const SparseHermitianMatrix &a, Index j, Index k);

/// |psi_j> on the walk layout.
StateVector build_psi_state(const SparseHermitianMatrix &a, Index j);

class WalkOperator {
public:
  /// Largest walk-space dimension for which dense matrices are produced.
  static constexpr Index kDenseLimit = 1024;

  /// Builds T, the signed swap and the completion U_T. Throws NumericalError
  /// if T fails to be an isometry.
  explicit WalkOperator(SparseHermitianMatrix a);

  const SparseHermitianMatrix &matrix() const { return matrix_; }
  const WalkSpace &space() const { return space_; }
  Index sparsity() const { return matrix_.sparsity(); }
  Index dimension() const { return space_.dimension(); }

  /// Nonzero amplitudes of T|j> = |psi_j>.
  std::span<const SparseAmplitude> psi(Index j) const;
  /// True when S has a -1 on |j,j>.
  bool swap_sign_flipped(Index j) const { return swap_flip_[j]; }

  Eigen::VectorXcd apply_isometry(const Eigen::VectorXcd &phi) const;
  Eigen::VectorXcd apply_isometry_adjoint(const Eigen::VectorXcd &v) const;
  Eigen::VectorXcd apply_swap(const Eigen::VectorXcd &v) const;
  Eigen::VectorXcd apply_walk(const Eigen::VectorXcd &v) const;
  Eigen::VectorXcd apply_walk_adjoint(const Eigen::VectorXcd &v) const;
  Eigen::VectorXcd apply_completion(const Eigen::VectorXcd &v) const;
  Eigen::VectorXcd apply_completion_adjoint(const Eigen::VectorXcd &v) const;

  /// U_n |0^m>|phi> on the full walk space.
  Eigen::VectorXcd apply_block_encoding(int order,
                                        const Eigen::VectorXcd &phi) const;

  Eigen::MatrixXcd isometry_matrix() const;
  Eigen::MatrixXcd swap_matrix() const;
  Eigen::MatrixXcd walk_matrix() const;
  Eigen::MatrixXcd completion_matrix() const;

private:
  void require_length(const Eigen::VectorXcd &v, Index expected,
                      const char *what) const;
  void require_dense_size(const char *what) const;

  SparseHermitianMatrix matrix_;
  WalkSpace space_;
  std::vector<std::vector<SparseAmplitude>> columns_;
  std::vector<bool> swap_flip_;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr_;
  Eigen::VectorXcd column_phases_;
};

WalkOperator build_walk_operator(const SparseHermitianMatrix &a);

/// Result of U_n |0^m>|phi>.
struct BlockApplication {
  /// Full output on the ("ancilla", "index", ...) layout.
  StateVector output;
  /// <0^m| part: T_n(A/s)|phi>, unnormalized, on the input layout.
  StateVector projected;
  /// Norm of the component outside the ancilla-zero subspace.
  double garbage_norm = 0.0;
};

/// Applies U_n to |0^m> (x) phi. phi's first register must be the N-dim
/// "index" register; any further registers are spectators (used for the
/// entangled-copy constructions). Order 0 returns phi untouched.
BlockApplication chebyshev_block_apply(const WalkOperator &walk, int order,
                                       const StateVector &phi);
BlockApplication chebyshev_block_apply(const SparseHermitianMatrix &a,
                                       int order, const StateVector &phi);

/// T_n(x) and U_n(x) by the three-term recurrence.
double chebyshev_first_kind(int n, double x);
double chebyshev_second_kind(int n, double x);

/// One named outcome of the walk self-check suite.
struct InvariantCheck {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
};

/// Tolerances of the self-check suite.
inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kBlockFormTolerance = 1e-9;
inline constexpr double kChebyshevTolerance = 1e-8;
inline constexpr int kMaxCheckedOrder = 10;

/// Runs every walk invariant on `a`: isometry, completion, unitarity, swap,
/// encoding identity, 2x2 block form per eigenpair, Chebyshev powers and the
/// block-apply recurrence.
std::vector<InvariantCheck> verify_walk(const SparseHermitianMatrix &a);

} // namespace chebwalk
