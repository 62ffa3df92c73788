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
#pragma once

#include <optional>
#include <vector>

#include "chebwalk/estimators.hpp"
#include "chebwalk/matrix_apply.hpp"

namespace chebwalk {

struct PowerIterate {
  int k = 0;
  /// |x_k>, unit norm.
  StateVector state;
  /// ||A x_k|| (x_k normalized).
  double norm_ratio = 0.0;
  /// <x_k|A|x_k>, unscaled.
  double rayleigh = 0.0;
  /// Probability that every post-selection producing x_k succeeded:
  /// prod_{j<k} ||A x_j||^2 / s^2.
  double cumulative_success_probability = 1.0;
};

struct PowerIterationTrace {
  std::vector<PowerIterate> iterates;
  /// First k >= 1 with |rho_k - rho_{k-1}| < tol.
  std::optional<int> converged_at;
  /// Rayleigh quotient of the last iterate (signed, unscaled).
  double eigenvalue_estimate = 0.0;
  /// |eigenvalue_estimate|.
  double magnitude_estimate = 0.0;
  /// Iterates flip sign from step to step: the dominant eigenvalue is
  /// negative, so only the magnitude is a reliable "largest eigenvalue".
  bool sign_ambiguous = false;
  /// The last iterate is still not an eigenvector: 1 - |<x_k|x_{k+1}>|
  /// exceeds sqrt(tol). Typical cause: eigenvalues +-lambda of (nearly)
  /// equal magnitude, where the iterates alternate and rho_k can stall at a
  /// value that is not an eigenvalue.
  bool stagnated = false;
};

/// x_{k+1} = A x_k / ||A x_k||, each step through the order-1 block encoding
/// with post-selection. Stops at the first k with |rho_k - rho_{k-1}| < tol
/// or after max_k applications. Throws NumericalError if some A x_k = 0.
PowerIterationTrace power_iterate(const SparseHermitianMatrix &a,
                                  const StateVector &x0, int max_k, double tol);

/// <x|A|x>: exact mode returns s <x|(A/s)|x>; shot mode runs the Hadamard
/// test between |0^m>|x> and U_1|0^m>|x> and rescales by s.
ShotEstimate estimate_rayleigh(const WalkOperator &walk, const StateVector &x,
                               const EstimatorOptions &opts = {});
ShotEstimate estimate_rayleigh(const SparseHermitianMatrix &a,
                               const StateVector &x,
                               const EstimatorOptions &opts = {});

} // namespace chebwalk
