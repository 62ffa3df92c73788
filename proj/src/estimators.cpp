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
#include "chebwalk/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "chebwalk/error.hpp"

namespace chebwalk {

namespace {

/// P_A invocations in one run of U_n: U_T, n walk steps (T and T^dagger
/// each), U_T^dagger.
std::uint64_t queries_per_block(int order) {
  return 2 * static_cast<std::uint64_t>(order) + 2;
}

void require_same_dimension(const StateVector &a, const StateVector &b,
                            const char *what) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError(std::string(what) + ": state dimensions " +
                          std::to_string(a.dimension()) + " and " +
                          std::to_string(b.dimension()) + " differ");
  }
}

double part_of(Complex z, OverlapPart part) {
  return part == OverlapPart::Real ? z.real() : z.imag();
}

Complex place(double x, OverlapPart part) {
  return part == OverlapPart::Real ? Complex(x, 0.0) : Complex(0.0, x);
}

void set_error(ShotEstimate &e, double se, OverlapPart part) {
  if (part == OverlapPart::Real) {
    e.standard_error = se;
  } else {
    e.standard_error_imag = se;
  }
}

/// 2 k / n - 1 and its plug-in standard error.
std::pair<double, double> invert_bernoulli(std::uint64_t zeros,
                                           std::uint64_t shots) {
  const double x = 2.0 * static_cast<double>(zeros) / static_cast<double>(shots) - 1.0;
  const double se = std::sqrt(std::max(0.0, 1.0 - x * x) / static_cast<double>(shots));
  return {x, se};
}

/// Rescales a raw overlap estimate by the normalization divisor.
ShotEstimate rescale(ShotEstimate raw, std::string method, Normalization norm,
                     std::optional<Complex> exact_raw) {
  const double d = norm.divisor();
  ShotEstimate out = std::move(raw);
  out.method = std::move(method);
  out.raw = out.estimate;
  out.estimate = out.raw * d;
  out.standard_error *= d;
  out.standard_error_imag *= d;
  out.normalization = std::move(norm);
  if (out.shots == 0) {
    out.exact = out.estimate;
  } else if (exact_raw) {
    out.exact = *exact_raw * d;
  } else {
    out.exact.reset();
  }
  return out;
}

std::vector<std::string> ancilla_mask() { return {"ancilla"}; }

} // namespace

double Normalization::divisor() const {
  double d = 1.0;
  for (const NormalizationFactor &f : factors) {
    d *= f.value;
  }
  return d;
}

Complex Normalization::raw_from(Complex estimate) const {
  if (square_root) {
    return estimate * estimate / divisor();
  }
  return estimate / divisor();
}

// Primitives -----------------------------------------------------------------

ShotEstimate hadamard_test(const StateVector &phi1, const StateVector &phi2,
                           std::uint64_t shots, std::uint64_t seed,
                           OverlapPart part) {
  require_same_dimension(phi1, phi2, "hadamard_test");
  phi1.require_unit_norm("hadamard_test first state");
  phi2.require_unit_norm("hadamard_test second state");
  const double x = part_of(inner_product(phi2, phi1), part);

  ShotEstimate e;
  e.method = "hadamard";
  e.shots = shots;
  e.seed = seed;
  e.exact = place(x, part);
  if (shots == 0) {
    e.estimate = place(x, part);
    e.raw = e.estimate;
    return e;
  }
  ShotSampler sampler(seed);
  const auto zeros = sampler.binomial(shots, 0.5 * (1.0 + x));
  const auto [xhat, se] = invert_bernoulli(zeros, shots);
  e.estimate = place(xhat, part);
  e.raw = e.estimate;
  set_error(e, se, part);
  return e;
}

ShotEstimate swap_test(const StateVector &phi1, const StateVector &phi2,
                       std::uint64_t shots, std::uint64_t seed) {
  require_same_dimension(phi1, phi2, "swap_test");
  phi1.require_unit_norm("swap_test first state");
  phi2.require_unit_norm("swap_test second state");
  const double f = std::norm(inner_product(phi1, phi2));

  ShotEstimate e;
  e.method = "swap";
  e.shots = shots;
  e.seed = seed;
  e.exact = Complex(f, 0.0);
  if (shots == 0) {
    e.estimate = Complex(f, 0.0);
    e.raw = e.estimate;
    return e;
  }
  ShotSampler sampler(seed);
  const auto zeros = sampler.binomial(shots, 0.5 * (1.0 + f));
  const auto [fhat, se] = invert_bernoulli(zeros, shots);
  e.estimate = Complex(fhat, 0.0);
  e.raw = e.estimate;
  e.standard_error = se;
  return e;
}

ShotEstimate projected_hadamard_test(const StateVector &phi1,
                                     const StateVector &phi2,
                                     const std::vector<std::string> &mask,
                                     std::uint64_t shots, std::uint64_t seed,
                                     OverlapPart part) {
  require_same_dimension(phi1, phi2, "projected_hadamard_test");
  if (!(phi1.layout() == phi2.layout())) {
    throw ValidationError(
        "projected_hadamard_test: states do not share a register layout");
  }
  if (mask.empty()) {
    ShotEstimate e = hadamard_test(phi1, phi2, shots, seed, part);
    e.method = "projected-hadamard";
    return e;
  }
  phi1.require_unit_norm("projected_hadamard_test first state");
  phi2.require_unit_norm("projected_hadamard_test second state");
  const StateVector p1 = project_zero(phi1, mask);
  const StateVector p2 = project_zero(phi2, mask);
  const double x = part_of(inner_product(p2, p1), part);
  const double n1 = p1.norm() * p1.norm();
  const double n2 = p2.norm() * p2.norm();

  ShotEstimate e;
  e.method = "projected-hadamard";
  e.shots = shots;
  e.seed = seed;
  e.exact = place(x, part);
  if (shots == 0) {
    e.estimate = place(x, part);
    e.raw = e.estimate;
    return e;
  }
  if (shots < 3) {
    throw ValidationError(
        "projected_hadamard_test needs at least 3 shots (three circuits)");
  }
  const std::uint64_t side = shots / 3;
  const std::uint64_t joint = shots - 2 * side;
  const ShotSampler root(seed);
  ShotSampler s0 = root.split(0);
  ShotSampler s1 = root.split(1);
  ShotSampler s2 = root.split(2);
  const double q = 0.25 * (n1 + n2 + 2.0 * x);
  const double qhat = static_cast<double>(s0.binomial(joint, q)) / static_cast<double>(joint);
  const double n1hat = static_cast<double>(s1.binomial(side, n1)) / static_cast<double>(side);
  const double n2hat = static_cast<double>(s2.binomial(side, n2)) / static_cast<double>(side);
  const double xhat = 0.5 * (4.0 * qhat - n1hat - n2hat);
  const double var = 0.25 * (16.0 * qhat * (1.0 - qhat) / static_cast<double>(joint) +
                             n1hat * (1.0 - n1hat) / static_cast<double>(side) +
                             n2hat * (1.0 - n2hat) / static_cast<double>(side));
  e.estimate = place(xhat, part);
  e.raw = e.estimate;
  set_error(e, std::sqrt(std::max(0.0, var)), part);
  return e;
}

namespace {

template <typename Single>
ShotEstimate combine_parts(std::uint64_t shots, std::uint64_t seed,
                           std::uint64_t min_shots, const char *what,
                           Single single) {
  if (shots == 0) {
    ShotEstimate re = single(0, seed, OverlapPart::Real);
    const ShotEstimate im = single(0, seed, OverlapPart::Imaginary);
    re.estimate = Complex(re.estimate.real(), im.estimate.imag());
    re.raw = re.estimate;
    re.exact = re.estimate;
    return re;
  }
  if (shots < min_shots) {
    throw ValidationError(std::string(what) + " needs at least " +
                          std::to_string(min_shots) + " shots");
  }
  const ShotSampler root(seed);
  const std::uint64_t re_shots = shots - shots / 2;
  const std::uint64_t im_shots = shots / 2;
  ShotEstimate re = single(re_shots, root.split(10).seed(), OverlapPart::Real);
  const ShotEstimate im = single(im_shots, root.split(11).seed(), OverlapPart::Imaginary);
  re.estimate = Complex(re.estimate.real(), im.estimate.imag());
  re.raw = re.estimate;
  re.standard_error_imag = im.standard_error_imag;
  re.exact = Complex(re.exact->real(), im.exact->imag());
  re.shots = shots;
  re.seed = seed;
  return re;
}

} // namespace

ShotEstimate complex_overlap(const StateVector &phi1, const StateVector &phi2,
                             std::uint64_t shots, std::uint64_t seed) {
  return combine_parts(shots, seed, 2, "complex_overlap",
                       [&](std::uint64_t n, std::uint64_t sd, OverlapPart p) {
                         return hadamard_test(phi1, phi2, n, sd, p);
                       });
}

ShotEstimate complex_projected_overlap(const StateVector &phi1,
                                       const StateVector &phi2,
                                       const std::vector<std::string> &mask,
                                       std::uint64_t shots, std::uint64_t seed) {
  return combine_parts(shots, seed, 6, "complex_projected_overlap",
                       [&](std::uint64_t n, std::uint64_t sd, OverlapPart p) {
                         return projected_hadamard_test(phi1, phi2, mask, n, sd, p);
                       });
}

// Protocols -----------------------------------------------------------------

RelocationStates relocation_states(const RelocatedMatrix &relocated) {
  const WalkOperator walk(relocated.dilation());
  const Index n = relocated.dimension();
  const Index dilated = 2 * n;
  const StateVector selector =
      StateVector::basis(dilated, relocated.column_zero_selector());
  BlockApplication block = chebyshev_block_apply(walk, 1, selector);

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dilated));
  v.head(static_cast<Eigen::Index>(n)).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  const StateVector uniform_top(RegisterLayout::index_register(log2_exact(dilated)), v);
  return {std::move(block.output),
          embed_ancilla_zero(uniform_top, walk.space().ancilla_qubits()),
          relocated.dilated_sparsity()};
}

ShotEstimate trace_relocation(const SparseHermitianMatrix &a,
                              const EstimatorOptions &opts) {
  const RelocatedMatrix relocated = relocate_diagonal(a);
  const RelocationStates states = relocation_states(relocated);
  const double n = static_cast<double>(a.dimension());

  Normalization norm;
  norm.factors = {{"dilated_sparsity", static_cast<double>(states.dilated_sparsity)},
                  {"sqrt_N", std::sqrt(n)}};
  ShotEstimate raw = complex_overlap(states.applied, states.reference, opts.shots, opts.seed);
  std::optional<Complex> exact_raw;
  if (opts.record_exact) {
    exact_raw = inner_product(states.reference, states.applied);
  }
  ShotEstimate e = rescale(std::move(raw), "relocation", std::move(norm), exact_raw);
  e.oracle_queries = queries_per_block(1);
  if (states.dilated_sparsity != a.sparsity()) {
    e.warnings.push_back("normalized by dilated sparsity s'=" +
                         std::to_string(states.dilated_sparsity) +
                         " instead of s=" + std::to_string(a.sparsity()));
  }
  return e;
}

EntangledStates entangled_trace_states(const WalkOperator &walk) {
  const StateVector ent = StateVector::maximally_entangled(walk.matrix().dimension());
  BlockApplication block = chebyshev_block_apply(walk, 1, ent);
  return {std::move(block.output),
          embed_ancilla_zero(ent, walk.space().ancilla_qubits())};
}

ShotEstimate trace_entangled(const SparseHermitianMatrix &a,
                             const EstimatorOptions &opts) {
  const WalkOperator walk(a);
  const EntangledStates states = entangled_trace_states(walk);

  Normalization norm;
  norm.factors = {{"s", static_cast<double>(a.sparsity())},
                  {"N", static_cast<double>(a.dimension())}};
  ShotEstimate raw = complex_overlap(states.applied, states.reference, opts.shots, opts.seed);
  std::optional<Complex> exact_raw;
  if (opts.record_exact) {
    exact_raw = inner_product(states.reference, states.applied);
  }
  ShotEstimate e = rescale(std::move(raw), "entangled", std::move(norm), exact_raw);
  e.oracle_queries = queries_per_block(1);
  return e;
}

ProductStates product_trace_states(const WalkOperator &walk_a_adjoint,
                                   const WalkOperator &walk_b) {
  if (walk_a_adjoint.matrix().dimension() != walk_b.matrix().dimension()) {
    throw ValidationError("trace_product: matrix dimensions " +
                          std::to_string(walk_a_adjoint.matrix().dimension()) +
                          " and " + std::to_string(walk_b.matrix().dimension()) +
                          " differ");
  }
  const StateVector ent = StateVector::maximally_entangled(walk_b.matrix().dimension());
  return {chebyshev_block_apply(walk_b, 1, ent).output,
          chebyshev_block_apply(walk_a_adjoint, 1, ent).output, ancilla_mask()};
}

TraceProductEstimate trace_product(const SparseHermitianMatrix &a,
                                   const SparseHermitianMatrix &b,
                                   const EstimatorOptions &opts) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError("trace_product: matrix dimensions " +
                          std::to_string(a.dimension()) + " and " +
                          std::to_string(b.dimension()) + " differ");
  }
  const WalkOperator walk_adj(a.adjoint());
  const WalkOperator walk_b(b);
  const ProductStates states = product_trace_states(walk_adj, walk_b);

  Normalization norm;
  norm.factors = {{"N", static_cast<double>(a.dimension())},
                  {"s_A", static_cast<double>(a.sparsity())},
                  {"s_B", static_cast<double>(b.sparsity())}};
  ShotEstimate raw = complex_projected_overlap(
      states.applied_b, states.applied_a_adjoint, states.mask, opts.shots, opts.seed);

  const Complex projected = inner_product(project_zero(states.applied_a_adjoint, states.mask),
                                          project_zero(states.applied_b, states.mask));
  const Complex unprojected = inner_product(states.applied_a_adjoint, states.applied_b);
  std::optional<Complex> exact_raw;
  if (opts.record_exact) {
    exact_raw = projected;
  }

  TraceProductEstimate out;
  out.trace = rescale(std::move(raw), "product", std::move(norm), exact_raw);
  out.trace.oracle_queries = 2 * queries_per_block(1);
  out.magnitude = std::abs(out.trace.estimate);
  out.garbage_cross_term = unprojected - projected;
  return out;
}

ShotEstimate frobenius_via_product(const SparseHermitianMatrix &a,
                                   const EstimatorOptions &opts) {
  TraceProductEstimate tp = trace_product(a.adjoint(), a, opts);
  ShotEstimate e = std::move(tp.trace);
  e.method = "product";
  e.normalization.square_root = true;

  const double squared = e.estimate.real();
  e.raw = Complex(e.raw.real(), 0.0);
  if (squared < 0.0) {
    e.warnings.push_back("negative Tr(A^dagger A) estimate clamped to 0");
  }
  const double value = std::sqrt(std::max(0.0, squared));
  if (e.shots > 0) {
    e.standard_error = value > 0.0 ? e.standard_error / (2.0 * value)
                                   : std::sqrt(e.standard_error);
  }
  e.standard_error_imag = 0.0;
  e.estimate = Complex(value, 0.0);
  if (e.exact) {
    e.exact = Complex(std::sqrt(std::max(0.0, e.exact->real())), 0.0);
  }
  if (e.shots == 0) {
    e.exact = e.estimate;
  }
  return e;
}

ShotEstimate frobenius_mixed_state(const SparseHermitianMatrix &a,
                                   const EstimatorOptions &opts) {
  const WalkOperator walk(a);
  const StateVector ent = StateVector::maximally_entangled(a.dimension());
  const BlockApplication block = chebyshev_block_apply(walk, 1, ent);
  const double p = block.projected.norm() * block.projected.norm();
  const double n = static_cast<double>(a.dimension());
  const double s = static_cast<double>(a.sparsity());

  ShotEstimate e;
  e.method = "mixed-state";
  e.shots = opts.shots;
  e.seed = opts.seed;
  e.normalization.factors = {{"N", n}, {"s^2", s * s}};
  e.normalization.square_root = true;
  e.success_probability = p;
  e.oracle_queries = queries_per_block(1);
  const double scale = n * s * s;
  const Complex exact(std::sqrt(p * scale), 0.0);
  if (opts.shots == 0) {
    e.raw = Complex(p, 0.0);
    e.estimate = exact;
    e.exact = exact;
    return e;
  }
  ShotSampler sampler(opts.seed);
  const double phat = static_cast<double>(sampler.binomial(opts.shots, p)) /
                      static_cast<double>(opts.shots);
  e.raw = Complex(phat, 0.0);
  e.estimate = Complex(std::sqrt(phat * scale), 0.0);
  e.standard_error = 0.5 * std::sqrt(scale) *
                     std::sqrt((1.0 - phat) / static_cast<double>(opts.shots));
  if (opts.record_exact) {
    e.exact = exact;
  }
  return e;
}

} // namespace chebwalk
