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
#include "chebwalk/power_method.hpp"

#include <cmath>

#include "chebwalk/error.hpp"

namespace chebwalk {

namespace {

StateVector as_index_state(const WalkOperator &walk, const StateVector &x) {
  if (x.dimension() != walk.matrix().dimension()) {
    throw ValidationError("state dimension " + std::to_string(x.dimension()) +
                          " does not match matrix dimension " +
                          std::to_string(walk.matrix().dimension()));
  }
  return {RegisterLayout::index_register(walk.space().index_qubits), x.amplitudes()};
}

} // namespace

ShotEstimate estimate_rayleigh(const WalkOperator &walk, const StateVector &x,
                               const EstimatorOptions &opts) {
  x.require_unit_norm("Rayleigh quotient state");
  const StateVector input = as_index_state(walk, x);
  const BlockApplication block = chebyshev_block_apply(walk, 1, input);
  const StateVector reference =
      embed_ancilla_zero(input, walk.space().ancilla_qubits());

  const double s = static_cast<double>(walk.sparsity());
  ShotEstimate e = hadamard_test(block.output, reference, opts.shots, opts.seed,
                                 OverlapPart::Real);
  const Complex exact_raw = *e.exact;
  e.method = "rayleigh";
  e.raw = e.estimate;
  e.estimate *= s;
  e.standard_error *= s;
  e.normalization.factors = {{"s", s}};
  e.exact = exact_raw * s;
  if (opts.shots > 0 && !opts.record_exact) {
    e.exact.reset();
  }
  e.oracle_queries = 4;
  return e;
}

ShotEstimate estimate_rayleigh(const SparseHermitianMatrix &a,
                               const StateVector &x,
                               const EstimatorOptions &opts) {
  return estimate_rayleigh(WalkOperator(a), x, opts);
}

PowerIterationTrace power_iterate(const SparseHermitianMatrix &a,
                                  const StateVector &x0, int max_k, double tol) {
  if (max_k < 1) {
    throw ValidationError("max_k must be at least 1");
  }
  if (!(tol > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  x0.require_unit_norm("initial state x0");
  const WalkOperator walk(a);
  const EstimatorOptions exact{.shots = 0, .seed = 0, .record_exact = true};

  PowerIterationTrace trace;
  StateVector x = as_index_state(walk, x0);
  double cumulative = 1.0;
  for (int k = 0;; ++k) {
    const ApplicationResult step = apply_matrix(walk, x, 1);
    PowerIterate it;
    it.k = k;
    it.state = x;
    it.norm_ratio = step.output_norm;
    it.rayleigh = estimate_rayleigh(walk, x, exact).estimate.real();
    it.cumulative_success_probability = cumulative;
    trace.iterates.push_back(it);

    if (k >= 1 &&
        std::abs(it.rayleigh - trace.iterates[trace.iterates.size() - 2].rayleigh) < tol) {
      trace.converged_at = k;
      break;
    }
    if (k == max_k) {
      break;
    }
    if (!step.output_state) {
      throw NumericalError("A x_" + std::to_string(k) +
                           " = 0: the iterate lies in the kernel of A");
    }
    cumulative *= step.success_probability;
    x = *step.output_state;
  }

  const PowerIterate &last = trace.iterates.back();
  trace.eigenvalue_estimate = last.rayleigh;
  trace.magnitude_estimate = std::abs(last.rayleigh);
  // <x_k|x_{k+1}> = rho_k / ||A x_k||, so a negative Rayleigh quotient means
  // the iterates alternate in sign.
  trace.sign_ambiguous = last.rayleigh < 0.0;

  // |<x_k|x_{k+1}>| = |rho_k| / ||A x_k||, which is 1 exactly when x_k is an
  // eigenvector. Competing eigenvalues +-lambda keep it away from 1 even
  // when rho_k has stopped moving.
  if (last.norm_ratio > kZeroOutputNorm) {
    const double alignment = std::abs(last.rayleigh) / last.norm_ratio;
    trace.stagnated = 1.0 - alignment > std::sqrt(tol);
  }
  return trace;
}

} // namespace chebwalk
