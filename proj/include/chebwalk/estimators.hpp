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
 * Overlap-test primitives and the trace / product-trace / Frobenius-norm
 * estimators built on the walk block encoding.
 *
 * Every estimator has two modes. With shots == 0 it returns the noiseless
 * value read off the simulated statevectors. With shots > 0 it draws
 * measurement counts from a seeded sampler and inverts the outcome
 * statistics, reporting a plug-in standard error.
 *
 * Each estimate records the chain of divisors separating the physical
 * quantity from the raw overlap or probability the circuit measures
 * (for example s' sqrt(N) for the relocation trace), so that
 * estimate / divisor == raw (or estimate^2 / divisor == raw for norms).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chebwalk/relocation.hpp"
#include "chebwalk/sampling.hpp"
#include "chebwalk/walk.hpp"

namespace chebwalk {

enum class OverlapPart { Real, Imaginary };

struct NormalizationFactor {
  std::string name;
  double value = 1.0;
};

struct Normalization {
  std::vector<NormalizationFactor> factors;
  /// The estimate is sqrt(divisor * raw) instead of divisor * raw.
  bool square_root = false;

  double divisor() const;
  /// Maps an estimate back to the raw measured quantity.
  Complex raw_from(Complex estimate) const;
};

struct ShotEstimate {
  std::string method;
  /// The rescaled physical quantity.
  Complex estimate;
  /// Overlap or probability actually measured.
  Complex raw;
  /// 0 means exact mode.
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Standard error of the real part (or of the real-valued estimate).
  double standard_error = 0.0;
  double standard_error_imag = 0.0;
  /// Noiseless value; filled in exact mode, or in shot mode when requested.
  std::optional<Complex> exact;
  Normalization normalization;
  /// Probability of the post-selected ancilla outcome, when one is measured.
  std::optional<double> success_probability;
  /// Oracle (P_A) invocations per circuit execution.
  std::uint64_t oracle_queries = 0;
  std::vector<std::string> warnings;
};

/// Estimation options shared by all protocols.
struct EstimatorOptions {
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = kDefaultSeed;
  /// Also record the noiseless value in shot mode.
  bool record_exact = true;
};

// Primitives -----------------------------------------------------------------

/// Re or Im of <phi2|phi1>. Shot mode samples the ancilla with
/// p(0) = (1 + x) / 2 and returns 2 p_hat - 1.
ShotEstimate hadamard_test(const StateVector &phi1, const StateVector &phi2,
                           std::uint64_t shots, std::uint64_t seed,
                           OverlapPart part);

/// |<phi1|phi2>|^2 from p(0) = (1 + |<phi1|phi2>|^2) / 2.
ShotEstimate swap_test(const StateVector &phi1, const StateVector &phi2,
                       std::uint64_t shots, std::uint64_t seed);

/// Re or Im of <P phi2 | P phi1>, P projecting the registers named in
/// `mask` onto |0...0>. Shot mode splits the budget over three circuits:
/// the Hadamard test with the masked registers measured, estimating
/// (|P phi1|^2 + |P phi2|^2 + 2 x) / 4, and two post-selection runs
/// estimating |P phi1|^2 and |P phi2|^2.
ShotEstimate projected_hadamard_test(const StateVector &phi1,
                                     const StateVector &phi2,
                                     const std::vector<std::string> &mask,
                                     std::uint64_t shots, std::uint64_t seed,
                                     OverlapPart part);

/// Re and Im of <phi2|phi1> from disjoint halves of the shot budget.
ShotEstimate complex_overlap(const StateVector &phi1, const StateVector &phi2,
                             std::uint64_t shots, std::uint64_t seed);
ShotEstimate complex_projected_overlap(const StateVector &phi1,
                                       const StateVector &phi2,
                                       const std::vector<std::string> &mask,
                                       std::uint64_t shots, std::uint64_t seed);

// Protocols -----------------------------------------------------------------

/// The two states compared by the relocation trace estimator.
struct RelocationStates {
  /// U(H(A')) |0^m>|N>: H(A')/s' applied to the column-0 selector.
  StateVector applied;
  /// |0^m> (x) (1/sqrt(N)) sum_{i<N} |i> in the 2N-dimensional register.
  StateVector reference;
  Index dilated_sparsity = 0;
};
RelocationStates relocation_states(const RelocatedMatrix &relocated);

/// Tr(A) = s' sqrt(N) <Phi2|Phi1> via the relocated, dilated matrix.
ShotEstimate trace_relocation(const SparseHermitianMatrix &a,
                              const EstimatorOptions &opts = {});

struct EntangledStates {
  /// (U_1(A) (x) I) |0^m> (1/sqrt(N)) sum_i |i>|i>.
  StateVector applied;
  /// |0^m> (1/sqrt(N)) sum_i |i>|i>.
  StateVector reference;
};
EntangledStates entangled_trace_states(const WalkOperator &walk);

/// Tr(A) = s N <phi2|phi1>; the plain Hadamard test is unbiased because the
/// reference lies in the ancilla-zero subspace.
ShotEstimate trace_entangled(const SparseHermitianMatrix &a,
                             const EstimatorOptions &opts = {});

struct ProductStates {
  /// (1/sqrt(N)) sum_i (|0^m> B/s_B |i> + |G_i>) |i>.
  StateVector applied_b;
  /// (1/sqrt(N)) sum_i (|0^m> A^dagger/s_A |i> + |G'_i>) |i>.
  StateVector applied_a_adjoint;
  std::vector<std::string> mask;
};
ProductStates product_trace_states(const WalkOperator &walk_a_adjoint,
                                   const WalkOperator &walk_b);

struct TraceProductEstimate {
  ShotEstimate trace;
  /// |Tr(AB)| from the estimated real and imaginary parts.
  double magnitude = 0.0;
  /// <Phi2|phi2> - <P Phi2|P phi2>: the garbage cross-term that makes the
  /// projection necessary.
  Complex garbage_cross_term;
};

/// Tr(AB) = N s_A s_B <P Phi2|P phi2>.
TraceProductEstimate trace_product(const SparseHermitianMatrix &a,
                                   const SparseHermitianMatrix &b,
                                   const EstimatorOptions &opts = {});

/// ||A||_F = sqrt(Tr(A^dagger A)); a negative shot-mode trace is clamped to
/// zero with a warning.
ShotEstimate frobenius_via_product(const SparseHermitianMatrix &a,
                                   const EstimatorOptions &opts = {});

/// ||A||_F = sqrt(p N s^2) where p is the probability of |0^m> after
/// applying A/s to the maximally mixed state (purified by a copy register).
ShotEstimate frobenius_mixed_state(const SparseHermitianMatrix &a,
                                   const EstimatorOptions &opts = {});

} // namespace chebwalk
