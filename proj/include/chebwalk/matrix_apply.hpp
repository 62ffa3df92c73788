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
 * Single-step matrix application: prepare |0^m>|B>, run the order-1 block
 * encoding (T_1(x) = x, so the ancilla-zero block is exactly A/s), then
 * post-select the ancilla on |0^m>.
 */
#pragma once

#include <cstdint>
#include <optional>

#include "chebwalk/walk.hpp"

namespace chebwalk {

/// Below this norm the projected vector is treated as exactly zero.
inline constexpr double kZeroOutputNorm = 1e-13;

struct ApplicationResult {
  /// A|B> / ||A|B>|| (or T_n(A/s)|B> normalized for order n). Empty when the
  /// post-selection can never succeed.
  std::optional<StateVector> output_state;
  /// ||A|B>||^2 / s^2 for order 1.
  double success_probability = 0.0;
  double garbage_norm = 0.0;
  /// Amplitude amplification cost, 1 / sqrt(success_probability)
  /// (= s / ||A|B>|| for order 1); +inf when the outcome is impossible.
  double expected_amplification_rounds = 0.0;
  int applied_order = 1;
  /// s * sqrt(success_probability): ||A|B>|| for order 1.
  double output_norm = 0.0;
};

ApplicationResult apply_matrix(const WalkOperator &walk, const StateVector &b,
                               int order = 1);
ApplicationResult apply_matrix(const SparseHermitianMatrix &a,
                               const StateVector &b);

struct SampledApplication {
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  double success_probability = 0.0;
  /// Same as apply_matrix's output; empty when success is impossible.
  std::optional<StateVector> conditional_state;
};

/// Repeats the post-selected preparation `shots` times; the number of
/// ancilla-zero outcomes is Binomial(shots, success_probability).
SampledApplication sample_application(const WalkOperator &walk,
                                      const StateVector &b,
                                      std::uint64_t shots, std::uint64_t seed,
                                      int order = 1);
SampledApplication sample_application(const SparseHermitianMatrix &a,
                                      const StateVector &b,
                                      std::uint64_t shots, std::uint64_t seed);

} // namespace chebwalk
