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
#include "chebwalk/matrix_apply.hpp"

#include <cmath>
#include <limits>

#include "chebwalk/error.hpp"
#include "chebwalk/sampling.hpp"

namespace chebwalk {

ApplicationResult apply_matrix(const WalkOperator &walk, const StateVector &b,
                               int order) {
  b.require_unit_norm("input state |B>");
  if (b.dimension() != walk.matrix().dimension()) {
    throw ValidationError("state dimension " + std::to_string(b.dimension()) +
                          " does not match matrix dimension " +
                          std::to_string(walk.matrix().dimension()));
  }
  const StateVector input(RegisterLayout::index_register(walk.space().index_qubits),
                          b.amplitudes());
  const BlockApplication block = chebyshev_block_apply(walk, order, input);

  ApplicationResult result;
  result.applied_order = order;
  result.garbage_norm = block.garbage_norm;
  const double norm = block.projected.norm();
  result.success_probability = norm * norm;
  result.output_norm = static_cast<double>(walk.sparsity()) * norm;
  if (norm <= kZeroOutputNorm) {
    result.success_probability = 0.0;
    result.output_norm = 0.0;
    result.expected_amplification_rounds = std::numeric_limits<double>::infinity();
    return result;
  }
  result.expected_amplification_rounds = 1.0 / norm;
  result.output_state =
      StateVector(b.layout(), block.projected.amplitudes() / norm);
  return result;
}

ApplicationResult apply_matrix(const SparseHermitianMatrix &a,
                               const StateVector &b) {
  return apply_matrix(WalkOperator(a), b, 1);
}

SampledApplication sample_application(const WalkOperator &walk,
                                      const StateVector &b,
                                      std::uint64_t shots, std::uint64_t seed,
                                      int order) {
  if (shots == 0) {
    throw ValidationError("sample_application needs at least one shot");
  }
  ApplicationResult exact = apply_matrix(walk, b, order);
  ShotSampler sampler(seed);
  SampledApplication out;
  out.shots = shots;
  out.seed = seed;
  out.success_probability = exact.success_probability;
  out.successes = sampler.binomial(shots, exact.success_probability);
  out.conditional_state = std::move(exact.output_state);
  return out;
}

SampledApplication sample_application(const SparseHermitianMatrix &a,
                                      const StateVector &b,
                                      std::uint64_t shots, std::uint64_t seed) {
  return sample_application(WalkOperator(a), b, shots, seed, 1);
}

} // namespace chebwalk
