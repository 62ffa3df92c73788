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
// Python bindings for the core library.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chebwalk/error.hpp"
#include "chebwalk/estimators.hpp"
#include "chebwalk/matrix_apply.hpp"
#include "chebwalk/power_method.hpp"
#include "chebwalk/sparse_matrix.hpp"
#include "chebwalk/walk.hpp"

namespace py = pybind11;
using namespace chebwalk;

namespace {

StateVector to_state(const Eigen::VectorXcd &amplitudes) {
  return StateVector::normalized(amplitudes);
}

EstimatorOptions options(std::uint64_t shots, std::uint64_t seed) {
  return EstimatorOptions{.shots = shots, .seed = seed, .record_exact = true};
}

} // namespace

PYBIND11_MODULE(_chebwalk, m) {
  m.doc() = "Sparse Hermitian matrix algorithms on a simulated Chebyshev quantum walk.";
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.attr("DEFAULT_SHOTS") = kDefaultShots;
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  py::class_<SparseHermitianMatrix>(m, "SparseHermitianMatrix")
      .def_static(
          "from_entries",
          [](Index dimension, Index sparsity,
             const std::vector<std::tuple<Index, Index, Complex>> &triples) {
            std::vector<Entry> entries;
            entries.reserve(triples.size());
            for (const auto &[i, j, v] : triples) {
              entries.push_back({i, j, v});
            }
            return SparseHermitianMatrix::from_entries(dimension, sparsity, entries);
          },
          py::arg("dimension"), py::arg("sparsity"), py::arg("entries"),
          "Build from (row, col, value) triples; one triangle suffices.")
      .def_static("load", &load_matrix, py::arg("path"), "Read a qmat v1 file.")
      .def_property_readonly("dimension", &SparseHermitianMatrix::dimension)
      .def_property_readonly("sparsity", &SparseHermitianMatrix::sparsity)
      .def("entry", &SparseHermitianMatrix::entry, py::arg("i"), py::arg("j"))
      .def("to_dense", &SparseHermitianMatrix::to_dense)
      .def("__repr__", [](const SparseHermitianMatrix &a) {
        return "SparseHermitianMatrix(dimension=" + std::to_string(a.dimension()) +
               ", sparsity=" + std::to_string(a.sparsity()) + ")";
      });

  py::class_<ShotEstimate>(m, "ShotEstimate")
      .def_readonly("method", &ShotEstimate::method)
      .def_readonly("estimate", &ShotEstimate::estimate)
      .def_readonly("raw", &ShotEstimate::raw)
      .def_readonly("shots", &ShotEstimate::shots)
      .def_readonly("seed", &ShotEstimate::seed)
      .def_readonly("stderr", &ShotEstimate::standard_error)
      .def_readonly("stderr_imag", &ShotEstimate::standard_error_imag)
      .def_readonly("exact", &ShotEstimate::exact)
      .def_readonly("success_probability", &ShotEstimate::success_probability)
      .def_readonly("oracle_queries", &ShotEstimate::oracle_queries)
      .def_readonly("warnings", &ShotEstimate::warnings)
      .def_property_readonly("divisor",
                             [](const ShotEstimate &e) { return e.normalization.divisor(); })
      .def("__repr__", [](const ShotEstimate &e) {
        return "ShotEstimate(method='" + e.method + "', estimate=" +
               std::to_string(e.estimate.real()) + "+" + std::to_string(e.estimate.imag()) +
               "j, stderr=" + std::to_string(e.standard_error) + ")";
      });

  py::class_<WalkOperator>(m, "WalkOperator")
      .def(py::init<SparseHermitianMatrix>(), py::arg("matrix"))
      .def_property_readonly("dimension", &WalkOperator::dimension)
      .def_property_readonly("sparsity", &WalkOperator::sparsity)
      .def("apply_walk", &WalkOperator::apply_walk, py::arg("v"))
      .def("apply_isometry", &WalkOperator::apply_isometry, py::arg("phi"))
      .def("apply_swap", &WalkOperator::apply_swap, py::arg("v"))
      .def("isometry_matrix", &WalkOperator::isometry_matrix)
      .def("swap_matrix", &WalkOperator::swap_matrix)
      .def("walk_matrix", &WalkOperator::walk_matrix)
      .def(
          "chebyshev_apply",
          [](const WalkOperator &w, int order, const Eigen::VectorXcd &phi) {
            const StateVector in(RegisterLayout::index_register(w.matrix().index_qubits()), phi);
            return chebyshev_block_apply(w, order, in).projected.amplitudes();
          },
          py::arg("order"), py::arg("phi"),
          "<0^m| U_n |0^m>|phi>, that is T_n(A/s) phi.");

  py::class_<ApplicationResult>(m, "ApplicationResult")
      .def_property_readonly("output_state",
                             [](const ApplicationResult &r) -> std::optional<Eigen::VectorXcd> {
                               if (!r.output_state) {
                                 return std::nullopt;
                               }
                               return r.output_state->amplitudes();
                             })
      .def_readonly("success_probability", &ApplicationResult::success_probability)
      .def_readonly("garbage_norm", &ApplicationResult::garbage_norm)
      .def_readonly("expected_amplification_rounds",
                    &ApplicationResult::expected_amplification_rounds)
      .def_readonly("order", &ApplicationResult::applied_order)
      .def_readonly("output_norm", &ApplicationResult::output_norm);

  m.def(
      "apply_matrix",
      [](const SparseHermitianMatrix &a, const Eigen::VectorXcd &b, int order) {
        return apply_matrix(WalkOperator(a), to_state(b), order);
      },
      py::arg("matrix"), py::arg("b"), py::arg("order") = 1,
      "Post-selected A|b>/||A|b>|| (b is normalized first).");

  m.def(
      "sample_application",
      [](const SparseHermitianMatrix &a, const Eigen::VectorXcd &b, std::uint64_t shots,
         std::uint64_t seed) {
        const SampledApplication s = sample_application(a, to_state(b), shots, seed);
        return py::make_tuple(s.successes, s.success_probability);
      },
      py::arg("matrix"), py::arg("b"), py::arg("shots") = kDefaultShots,
      py::arg("seed") = kDefaultSeed, "Returns (successes, exact success probability).");

  m.def(
      "trace_relocation",
      [](const SparseHermitianMatrix &a, std::uint64_t shots, std::uint64_t seed) {
        return trace_relocation(a, options(shots, seed));
      },
      py::arg("matrix"), py::arg("shots") = kDefaultShots, py::arg("seed") = kDefaultSeed);
  m.def(
      "trace_entangled",
      [](const SparseHermitianMatrix &a, std::uint64_t shots, std::uint64_t seed) {
        return trace_entangled(a, options(shots, seed));
      },
      py::arg("matrix"), py::arg("shots") = kDefaultShots, py::arg("seed") = kDefaultSeed);
  m.def(
      "trace_product",
      [](const SparseHermitianMatrix &a, const SparseHermitianMatrix &b, std::uint64_t shots,
         std::uint64_t seed) {
        const TraceProductEstimate t = trace_product(a, b, options(shots, seed));
        return py::make_tuple(t.trace, t.garbage_cross_term);
      },
      py::arg("a"), py::arg("b"), py::arg("shots") = kDefaultShots,
      py::arg("seed") = kDefaultSeed, "Returns (estimate, garbage cross-term).");
  m.def(
      "frobenius_via_product",
      [](const SparseHermitianMatrix &a, std::uint64_t shots, std::uint64_t seed) {
        return frobenius_via_product(a, options(shots, seed));
      },
      py::arg("matrix"), py::arg("shots") = kDefaultShots, py::arg("seed") = kDefaultSeed);
  m.def(
      "frobenius_mixed_state",
      [](const SparseHermitianMatrix &a, std::uint64_t shots, std::uint64_t seed) {
        return frobenius_mixed_state(a, options(shots, seed));
      },
      py::arg("matrix"), py::arg("shots") = kDefaultShots, py::arg("seed") = kDefaultSeed);

  py::class_<PowerIterationTrace>(m, "PowerIterationTrace")
      .def_readonly("converged_at", &PowerIterationTrace::converged_at)
      .def_readonly("eigenvalue", &PowerIterationTrace::eigenvalue_estimate)
      .def_readonly("magnitude", &PowerIterationTrace::magnitude_estimate)
      .def_readonly("sign_ambiguous", &PowerIterationTrace::sign_ambiguous)
      .def_readonly("stagnated", &PowerIterationTrace::stagnated)
      .def_property_readonly("rayleigh",
                             [](const PowerIterationTrace &t) {
                               std::vector<double> out;
                               for (const PowerIterate &it : t.iterates) {
                                 out.push_back(it.rayleigh);
                               }
                               return out;
                             })
      .def_property_readonly("states",
                             [](const PowerIterationTrace &t) {
                               std::vector<Eigen::VectorXcd> out;
                               for (const PowerIterate &it : t.iterates) {
                                 out.push_back(it.state.amplitudes());
                               }
                               return out;
                             })
      .def_property_readonly("cumulative_success_probability", [](const PowerIterationTrace &t) {
        return t.iterates.back().cumulative_success_probability;
      });

  m.def(
      "power_iterate",
      [](const SparseHermitianMatrix &a, std::optional<Eigen::VectorXcd> x0, int max_k,
         double tol) {
        const StateVector start =
            x0 ? to_state(*x0) : StateVector::uniform(a.dimension());
        return power_iterate(a, start, max_k, tol);
      },
      py::arg("matrix"), py::arg("x0") = py::none(), py::arg("max_k") = 60,
      py::arg("tol") = 1e-3, "Power iteration through the block encoding; x0 defaults to uniform.");
  m.def(
      "estimate_rayleigh",
      [](const SparseHermitianMatrix &a, const Eigen::VectorXcd &x, std::uint64_t shots,
         std::uint64_t seed) { return estimate_rayleigh(a, to_state(x), options(shots, seed)); },
      py::arg("matrix"), py::arg("x"), py::arg("shots") = kDefaultShots,
      py::arg("seed") = kDefaultSeed);

  m.def(
      "verify_walk",
      [](const SparseHermitianMatrix &a) {
        py::list out;
        for (const InvariantCheck &c : verify_walk(a)) {
          out.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                              py::arg("max_error") = c.max_error,
                              py::arg("tolerance") = c.tolerance));
        }
        return out;
      },
      py::arg("matrix"), "Self-check of the walk invariants; one dict per check.");
}
