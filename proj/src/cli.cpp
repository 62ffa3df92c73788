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
#include "chebwalk/cli.hpp"

#include <cmath>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include "chebwalk/error.hpp"
#include "chebwalk/matrix_apply.hpp"
#include "chebwalk/power_method.hpp"

namespace chebwalk::cli {

using json = nlohmann::ordered_json;

namespace {

const char *const kCommands[] = {"apply",     "trace",  "trace-prod",
                                 "frobenius", "eigmax", "verify-walk"};

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json normalization_json(const Normalization &n) {
  json factors = json::array();
  for (const auto &f : n.factors) {
    factors.push_back(json{{"name", f.name}, {"value", f.value}});
  }
  return json{{"factors", factors},
              {"divisor", n.divisor()},
              {"square_root", n.square_root}};
}

// Sparse y = A x.
Eigen::VectorXcd multiply(const SparseHermitianMatrix &a, const Eigen::VectorXcd &x) {
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(x.size());
  for (Index i = 0; i < a.dimension(); ++i) {
    for (const RowEntry &e : a.row(i)) {
      y(static_cast<Eigen::Index>(i)) += e.value * x(static_cast<Eigen::Index>(e.col));
    }
  }
  return y;
}

// T_n(A/s) x by the three-term recurrence.
Eigen::VectorXcd chebyshev_multiply(const SparseHermitianMatrix &a, int order,
                                    const Eigen::VectorXcd &x) {
  const double s = static_cast<double>(a.sparsity());
  Eigen::VectorXcd prev = x;
  if (order == 0) {
    return prev;
  }
  Eigen::VectorXcd cur = multiply(a, x) / s;
  for (int k = 1; k < order; ++k) {
    Eigen::VectorXcd next = 2.0 * multiply(a, cur) / s - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

StateVector load_input_state(const RunConfig &config, Index dimension) {
  switch (config.state_source) {
  case StateSource::File: {
    LoadedState loaded = load_state(config.state_path);
    if (loaded.state.dimension() != dimension) {
      throw ValidationError("state: dimension " +
                            std::to_string(loaded.state.dimension()) +
                            " does not match matrix dimension " +
                            std::to_string(dimension));
    }
    return loaded.state;
  }
  case StateSource::Basis:
    if (config.basis_index >= dimension) {
      throw ValidationError("basis: index " + std::to_string(config.basis_index) +
                            " out of range for dimension " +
                            std::to_string(dimension));
    }
    return StateVector::basis(dimension, config.basis_index);
  case StateSource::Uniform:
  case StateSource::None:
    break;
  }
  return StateVector::uniform(dimension);
}

EstimatorOptions options_for(const RunConfig &config) {
  return {.shots = config.shots, .seed = config.seed, .record_exact = true};
}

void attach_reference(json &out, const RunConfig &config, Complex reference,
                      Complex estimate) {
  if (!config.verify) {
    return;
  }
  out["reference"] = complex_json(reference);
  out["reference_error"] = std::abs(estimate - reference);
}

json base_document(const RunConfig &config, const ShotEstimate &e) {
  json out;
  out["command"] = config.command;
  json body = estimate_json(e);
  for (auto it = body.begin(); it != body.end(); ++it) {
    out[it.key()] = it.value();
  }
  if (!(e.exact && (config.shots == 0 || config.verify))) {
    out.erase("exact");
  }
  return out;
}

json run_apply(const RunConfig &config) {
  const SparseHermitianMatrix a = load_matrix(config.matrix_path);
  const StateVector b = load_input_state(config, a.dimension());
  const WalkOperator walk(a);
  const ApplicationResult exact = apply_matrix(walk, b, config.order);
  if (!exact.output_state) {
    throw NumericalError("success probability is zero: T_" +
                         std::to_string(config.order) + "(A/s)|B> = 0");
  }

  const double s = static_cast<double>(a.sparsity());
  const bool scaled = config.order == 1;
  const double scale = scaled ? s : 1.0;

  ShotEstimate e;
  e.method = "chebyshev-walk";
  e.shots = config.shots;
  e.seed = config.seed;
  e.normalization.square_root = true;
  if (scaled) {
    e.normalization.factors = {{"s^2", s * s}};
  }
  e.exact = Complex(exact.output_norm / (scaled ? 1.0 : s), 0.0);
  e.oracle_queries = 2 * static_cast<std::uint64_t>(config.order) + 2;

  std::uint64_t successes = 0;
  if (config.shots == 0) {
    e.raw = exact.success_probability;
    e.estimate = *e.exact;
  } else {
    const SampledApplication sampled =
        sample_application(walk, b, config.shots, config.seed, config.order);
    successes = sampled.successes;
    if (successes == 0) {
      throw NumericalError("no ancilla-zero outcome in " +
                           std::to_string(config.shots) + " shots");
    }
    const double n = static_cast<double>(config.shots);
    const double p = static_cast<double>(successes) / n;
    e.raw = p;
    e.estimate = scale * std::sqrt(p);
    e.standard_error = 0.5 * scale * std::sqrt((1.0 - p) / n);
  }

  json out = base_document(config, e);
  out["success_probability"] = exact.success_probability;
  if (config.shots > 0) {
    out["successes"] = successes;
  }
  out["order"] = exact.applied_order;
  out["garbage_norm"] = exact.garbage_norm;
  out["expected_amplification_rounds"] = exact.expected_amplification_rounds;
  json state = json::array();
  for (const Complex &z : exact.output_state->amplitudes()) {
    state.push_back(json::array({z.real(), z.imag()}));
  }
  out["output_state"] = state;

  if (config.verify) {
    const Eigen::VectorXcd y = chebyshev_multiply(a, config.order, b.amplitudes());
    const double norm = y.norm();
    const double reference = scale * norm;
    out["reference"] = complex_json(reference);
    out["reference_error"] = std::abs(e.estimate.real() - reference);
    out["reference_success_probability"] = norm * norm;
    out["state_error"] =
        (exact.output_state->amplitudes() - y / norm).cwiseAbs().maxCoeff();
  }
  return out;
}

Complex dense_trace(const SparseHermitianMatrix &a) {
  Complex t = 0.0;
  for (Index i = 0; i < a.dimension(); ++i) {
    t += a.entry(i, i);
  }
  return t;
}

json run_trace(const RunConfig &config) {
  const SparseHermitianMatrix a = load_matrix(config.matrix_path);
  const std::string method = config.method.value_or("entangled");
  const ShotEstimate e = method == "relocation"
                             ? trace_relocation(a, options_for(config))
                             : trace_entangled(a, options_for(config));
  json out = base_document(config, e);
  attach_reference(out, config, dense_trace(a), e.estimate);
  return out;
}

json run_trace_product(const RunConfig &config) {
  const SparseHermitianMatrix a = load_matrix(config.matrix_path);
  const SparseHermitianMatrix b = load_matrix(config.matrix_b_path);
  const TraceProductEstimate r = trace_product(a, b, options_for(config));
  json out = base_document(config, r.trace);
  out["abs"] = r.magnitude;
  out["garbage_cross_term"] = complex_json(r.garbage_cross_term);
  if (config.verify) {
    if (a.dimension() != b.dimension()) {
      throw ValidationError("matrix-b: dimension mismatch");
    }
    Complex reference = 0.0;
    for (Index i = 0; i < a.dimension(); ++i) {
      for (const RowEntry &e : a.row(i)) {
        reference += e.value * b.entry(e.col, i);
      }
    }
    attach_reference(out, config, reference, r.trace.estimate);
  }
  return out;
}

json run_frobenius(const RunConfig &config) {
  const SparseHermitianMatrix a = load_matrix(config.matrix_path);
  const EstimatorOptions opts = options_for(config);
  const ShotEstimate mixed = frobenius_mixed_state(a, opts);
  const ShotEstimate product = frobenius_via_product(a, opts);

  json out = base_document(config, mixed);
  out["method"] = "both";
  json routes;
  json m = estimate_json(mixed);
  json p = estimate_json(product);
  if (!(config.shots == 0 || config.verify)) {
    m.erase("exact");
    p.erase("exact");
  }
  routes["mixed_state"] = m;
  routes["product"] = p;
  out["routes"] = routes;
  out["discrepancy"] = std::abs(mixed.estimate - product.estimate);
  if (config.verify) {
    double sum = 0.0;
    for (const Entry &e : a.entries()) {
      sum += std::norm(e.value);
    }
    attach_reference(out, config, std::sqrt(sum), mixed.estimate);
  }
  return out;
}

json run_eigmax(const RunConfig &config) {
  const SparseHermitianMatrix a = load_matrix(config.matrix_path);
  const StateVector x0 = load_input_state(config, a.dimension());
  const PowerIterationTrace trace =
      power_iterate(a, x0, config.max_iterations, config.tolerance);
  const PowerIterate &last = trace.iterates.back();
  const ShotEstimate e = estimate_rayleigh(a, last.state, options_for(config));

  json out = base_document(config, e);
  out["method"] = "power-iteration";
  out["iterations"] = last.k;
  out["converged"] = trace.converged_at.has_value();
  out["tolerance"] = config.tolerance;
  out["magnitude"] = std::abs(e.estimate.real());
  out["sign_ambiguous"] = trace.sign_ambiguous;
  out["stagnated"] = trace.stagnated;
  out["cumulative_success_probability"] = last.cumulative_success_probability;
  if (config.verify) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.to_dense(),
                                                           Eigen::EigenvaluesOnly);
    attach_reference(out, config, solver.eigenvalues().maxCoeff(), e.estimate);
  }
  return out;
}

json run_verify_walk(const RunConfig &config, bool &all_passed) {
  const SparseHermitianMatrix a = load_matrix(config.matrix_path);
  const std::vector<InvariantCheck> checks = verify_walk(a);
  json list = json::array();
  all_passed = true;
  for (const auto &c : checks) {
    all_passed = all_passed && c.passed;
    list.push_back(json{{"name", c.name},
                        {"passed", c.passed},
                        {"max_error", c.max_error},
                        {"tolerance", c.tolerance}});
  }
  json out;
  out["command"] = config.command;
  out["passed"] = all_passed;
  out["checks"] = list;
  return out;
}

std::string scalar_text(const json &v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  return v.dump();
}

void render_table(const json &doc, const std::string &prefix,
                  std::ostringstream &out) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const json &v = it.value();
    if (v.is_object()) {
      if (v.contains("re") && v.contains("im") && v.size() == 2) {
        const double im = v["im"].get<double>();
        out << key << "  " << v["re"].dump() << (std::signbit(im) ? " - " : " + ")
            << json(std::abs(im)).dump() << "i\n";
      } else {
        render_table(v, key, out);
      }
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        render_table(v[i], key + "[" + std::to_string(i) + "]", out);
      }
    } else {
      out << key << "  " << scalar_text(v) << "\n";
    }
  }
}

std::string serialize(const json &doc, bool as_json) {
  if (as_json) {
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  render_table(doc, "", out);
  return out.str();
}

} // namespace

json estimate_json(const ShotEstimate &e) {
  json out;
  out["method"] = e.method;
  out["estimate"] = complex_json(e.estimate);
  out["abs"] = std::abs(e.estimate);
  out["stderr"] = e.standard_error;
  if (e.standard_error_imag != 0.0) {
    out["stderr_im"] = e.standard_error_imag;
  }
  out["shots"] = e.shots;
  out["seed"] = e.seed;
  out["normalization"] = normalization_json(e.normalization);
  if (e.exact) {
    out["exact"] = complex_json(*e.exact);
  }
  if (e.success_probability) {
    out["success_probability"] = *e.success_probability;
  }
  out["oracle_queries"] = e.oracle_queries;
  if (!e.warnings.empty()) {
    out["warnings"] = e.warnings;
  }
  return out;
}

void validate(const RunConfig &config) {
  bool known = false;
  for (const char *c : kCommands) {
    known = known || config.command == c;
  }
  if (!known) {
    throw ValidationError("command: unknown command '" + config.command + "'");
  }
  if (config.matrix_path.empty()) {
    throw ValidationError("matrix: --matrix is required");
  }
  if (config.command == "trace-prod" && config.matrix_b_path.empty()) {
    throw ValidationError("matrix-b: --matrix-b is required for trace-prod");
  }
  if (config.command != "trace-prod" && !config.matrix_b_path.empty()) {
    throw ValidationError("matrix-b: only valid for trace-prod");
  }
  if (config.state_source_count > 1) {
    throw ValidationError("state: give exactly one of --state, --basis, --uniform");
  }
  if (config.command == "apply" && config.state_source == StateSource::None) {
    throw ValidationError("state: apply needs one of --state, --basis, --uniform");
  }
  if (config.command != "apply" && config.command != "eigmax" &&
      config.state_source != StateSource::None) {
    throw ValidationError("state: not used by " + config.command);
  }
  if (config.method) {
    if (config.command != "trace") {
      throw ValidationError("method: only valid for trace");
    }
    if (*config.method != "relocation" && *config.method != "entangled") {
      throw ValidationError("method: expected relocation or entangled, got '" +
                            *config.method + "'");
    }
  }
  if (config.order < 0) {
    throw ValidationError("order: must be non-negative");
  }
  if (config.order != 1 && config.command != "apply") {
    throw ValidationError("order: only valid for apply");
  }
  if (config.max_iterations < 1) {
    throw ValidationError("max-iter: must be at least 1");
  }
  if (!(config.tolerance > 0.0)) {
    throw ValidationError("tol: must be positive");
  }
}

RunOutcome run(const RunConfig &config) {
  RunOutcome outcome;
  json doc;
  try {
    validate(config);
    if (config.command == "apply") {
      doc = run_apply(config);
    } else if (config.command == "trace") {
      doc = run_trace(config);
    } else if (config.command == "trace-prod") {
      doc = run_trace_product(config);
    } else if (config.command == "frobenius") {
      doc = run_frobenius(config);
    } else if (config.command == "eigmax") {
      doc = run_eigmax(config);
    } else {
      bool passed = true;
      doc = run_verify_walk(config, passed);
      if (!passed) {
        outcome.exit_code = kExitNumerical;
        outcome.error = "walk invariant check failed";
      }
    }
  } catch (const ValidationError &e) {
    outcome.exit_code = kExitValidation;
    outcome.error = e.what();
  } catch (const NumericalError &e) {
    outcome.exit_code = kExitNumerical;
    outcome.error = e.what();
  } catch (const std::exception &e) {
    outcome.exit_code = kExitNumerical;
    outcome.error = e.what();
  }

  if (doc.is_null()) {
    doc["command"] = config.command;
    doc["error"] = json{
        {"kind", outcome.exit_code == kExitValidation ? "validation" : "numerical"},
        {"message", outcome.error}};
  }
  outcome.output = serialize(doc, config.json);
  return outcome;
}

std::optional<RunConfig> parse_args(int argc, const char *const *argv,
                                    RunOutcome &outcome) {
  RunConfig config;
  std::int64_t shots = static_cast<std::int64_t>(kDefaultShots);
  std::int64_t basis = -1;
  std::string method;

  CLI::App app{"Chebyshev quantum-walk block encodings of sparse Hermitian "
               "matrices, simulated against dense linear algebra"};
  app.name("chebwalk");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--matrix", config.matrix_path, "qmat v1 matrix file");
    cmd->add_option("--matrix-b", config.matrix_b_path, "second matrix (trace-prod)");
    cmd->add_option("--state", config.state_path, "qvec v1 state file");
    cmd->add_option("--basis", basis, "computational basis state |K>");
    cmd->add_flag("--uniform", "uniform superposition state");
    cmd->add_option("--shots", shots, "measurement shots; 0 = exact")
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "sampler seed")
        ->envname("CHEBWALK_SEED")
        ->capture_default_str();
    cmd->add_option("--method", method, "trace method: relocation | entangled");
    cmd->add_option("--order", config.order, "Chebyshev order n (apply)")
        ->capture_default_str();
    cmd->add_flag("--json", config.json, "JSON output");
    cmd->add_flag("--verify", config.verify, "compare against dense linear algebra");
    cmd->add_option("--max-iter", config.max_iterations, "eigmax iteration cap")
        ->capture_default_str();
    cmd->add_option("--tol", config.tolerance, "eigmax stopping tolerance")
        ->capture_default_str();
  };

  const std::pair<const char *, const char *> commands[] = {
      {"apply", "post-selected A|B> through the block encoding"},
      {"trace", "Tr(A)"},
      {"trace-prod", "Tr(AB)"},
      {"frobenius", "||A||_F by both routes"},
      {"eigmax", "largest eigenvalue by power iteration"},
      {"verify-walk", "walk invariant self-checks"},
  };
  for (const auto &[name, help] : commands) {
    add_common(app.add_subcommand(name, help));
  }

  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    outcome.exit_code = code == 0 ? kExitOk : kExitValidation;
    outcome.output = out.str();
    outcome.error = err.str();
    return std::nullopt;
  }

  CLI::App *cmd = app.get_subcommands().front();
  config.command = cmd->get_name();
  if (shots < 0) {
    outcome.exit_code = kExitValidation;
    outcome.error = "shots: must be non-negative\n";
    return std::nullopt;
  }
  config.shots = static_cast<std::uint64_t>(shots);
  if (!method.empty()) {
    config.method = method;
  }
  if (cmd->count("--state") > 0) {
    config.state_source = StateSource::File;
    ++config.state_source_count;
  }
  if (cmd->count("--basis") > 0) {
    if (basis < 0) {
      outcome.exit_code = kExitValidation;
      outcome.error = "basis: must be non-negative\n";
      return std::nullopt;
    }
    config.state_source = StateSource::Basis;
    config.basis_index = static_cast<Index>(basis);
    ++config.state_source_count;
  }
  if (cmd->count("--uniform") > 0) {
    config.state_source = StateSource::Uniform;
    ++config.state_source_count;
  }
  return config;
}

} // namespace chebwalk::cli
