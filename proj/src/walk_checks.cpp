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
#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "chebwalk/walk.hpp"

namespace chebwalk {

namespace {

constexpr int kProbeCount = 8;
// Above this walk dimension unitarity is probed instead of checked densely.
constexpr Index kDenseUnitarityLimit = 256;
constexpr std::uint64_t kProbeSeed = 0x5eed'c4eb'0001ULL;

InvariantCheck make_check(std::string name, double err, double tol) {
  return {std::move(name), err <= tol, err, tol};
}

double max_abs(const Eigen::MatrixXcd &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::VectorXcd random_unit(Eigen::Index n, std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v[k] = Complex(g(rng), g(rng));
  }
  return v / v.norm();
}

/// max |U^dagger U - I| either densely or, for large spaces, through
/// ||U x|| and U^dagger U x on random probes.
template <typename Forward, typename Backward>
double unitarity_error(const WalkOperator &w, Forward fwd, Backward bwd,
                       std::mt19937_64 &rng) {
  const auto d = static_cast<Eigen::Index>(w.dimension());
  double err = 0.0;
  if (w.dimension() <= kDenseUnitarityLimit) {
    Eigen::MatrixXcd u(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      u.col(c) = fwd(Eigen::VectorXcd::Unit(d, c));
    }
    return max_abs(u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d));
  }
  for (int p = 0; p < kProbeCount; ++p) {
    const Eigen::VectorXcd x = random_unit(d, rng);
    err = std::max(err, (bwd(fwd(x)) - x).cwiseAbs().maxCoeff());
  }
  return err;
}

} // namespace

std::vector<InvariantCheck> verify_walk(const SparseHermitianMatrix &a) {
  const WalkOperator w(a);
  const Index n = a.dimension();
  const auto ne = static_cast<Eigen::Index>(n);
  const double s = static_cast<double>(a.sparsity());
  std::mt19937_64 rng(kProbeSeed);
  std::vector<InvariantCheck> checks;

  const Eigen::MatrixXcd t = w.isometry_matrix();
  checks.push_back(make_check(
      "isometry T^dagger T = I",
      max_abs(t.adjoint() * t - Eigen::MatrixXcd::Identity(ne, ne)),
      kUnitarityTolerance));

  {
    double err = 0.0;
    const auto d = static_cast<Eigen::Index>(w.dimension());
    for (Eigen::Index j = 0; j < ne; ++j) {
      err = std::max(err, (w.apply_completion(Eigen::VectorXcd::Unit(d, j)) -
                           t.col(j)).cwiseAbs().maxCoeff());
    }
    checks.push_back(make_check("completion U_T|0^m>|j> = T|j>", err,
                                kUnitarityTolerance));
  }

  checks.push_back(make_check(
      "unitarity of U_T",
      unitarity_error(
          w, [&](const Eigen::VectorXcd &x) { return w.apply_completion(x); },
          [&](const Eigen::VectorXcd &x) { return w.apply_completion_adjoint(x); },
          rng),
      kUnitarityTolerance));
  checks.push_back(make_check(
      "unitarity of W",
      unitarity_error(
          w, [&](const Eigen::VectorXcd &x) { return w.apply_walk(x); },
          [&](const Eigen::VectorXcd &x) { return w.apply_walk_adjoint(x); },
          rng),
      kUnitarityTolerance));

  {
    // S^2 = I and S|x,y> = |y,x> away from the sign-flipped fixed points.
    // A vector of distinct labels exposes the whole permutation at once.
    const WalkSpace &sp = w.space();
    const auto d = static_cast<Eigen::Index>(w.dimension());
    Eigen::VectorXcd labels(d);
    for (Eigen::Index f = 0; f < d; ++f) {
      labels[f] = static_cast<double>(f + 1);
    }
    const Eigen::VectorXcd once = w.apply_swap(labels);
    double err = (w.apply_swap(once) - labels).cwiseAbs().maxCoeff();
    for (Index x = 0; x < sp.factor_dimension(); ++x) {
      for (Index y = 0; y < sp.factor_dimension(); ++y) {
        const auto from = sp.walk_flat(x, y);
        const auto to = static_cast<Eigen::Index>(sp.walk_flat(y, x));
        const double sign = (x == y && x < n && w.swap_sign_flipped(x)) ? -1.0 : 1.0;
        err = std::max(err, std::abs(once[to] - sign * static_cast<double>(from + 1)));
      }
    }
    checks.push_back(make_check("swap involution S^2 = I, S|j,k> = |k,j>", err,
                                kUnitarityTolerance));
  }

  const Eigen::MatrixXcd scaled = a.to_dense() / s;
  {
    Eigen::MatrixXcd st(t.rows(), t.cols());
    for (Eigen::Index c = 0; c < ne; ++c) {
      st.col(c) = w.apply_swap(t.col(c));
    }
    checks.push_back(make_check("encoding T^dagger S T = A/s",
                                max_abs(t.adjoint() * st - scaled),
                                kUnitarityTolerance));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(scaled);
  double block_err = 0.0;
  double power_err = 0.0;
  for (Eigen::Index k = 0; k < ne; ++k) {
    const double lambda = eig.eigenvalues()[k];
    const Eigen::VectorXcd e1 = w.apply_isometry(eig.eigenvectors().col(k));
    const Eigen::VectorXcd residual = w.apply_swap(e1) - lambda * e1;
    const double off = residual.norm();
    if (off < 1e-9) {
      // lambda = +-1: span{T|l>, ST|l>} is one-dimensional.
      Eigen::VectorXcd v = e1;
      for (int p = 1; p <= kMaxCheckedOrder; ++p) {
        v = w.apply_walk(v);
        const double expect = chebyshev_first_kind(p, lambda);
        const double err = (v - expect * e1).cwiseAbs().maxCoeff();
        if (p == 1) {
          block_err = std::max(block_err, err);
        }
        power_err = std::max(power_err, err);
      }
      continue;
    }
    const Eigen::VectorXcd e2 = residual / off;
    const double sine = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
    Eigen::VectorXcd v1 = e1;
    Eigen::VectorXcd v2 = e2;
    for (int p = 1; p <= kMaxCheckedOrder; ++p) {
      v1 = w.apply_walk(v1);
      v2 = w.apply_walk(v2);
      const double tp = chebyshev_first_kind(p, lambda);
      const double up = sine * chebyshev_second_kind(p - 1, lambda);
      // Columns of the 2x2 restriction, plus leakage out of the span.
      const Eigen::VectorXcd leak1 = v1 - (tp * e1 + up * e2);
      const Eigen::VectorXcd leak2 = v2 - (-up * e1 + tp * e2);
      const double err = std::max(leak1.cwiseAbs().maxCoeff(),
                                  leak2.cwiseAbs().maxCoeff());
      if (p == 1) {
        block_err = std::max(block_err, err);
      }
      power_err = std::max(power_err, err);
    }
  }
  checks.push_back(make_check("walk block form [[l, -sqrt(1-l^2)], [sqrt(1-l^2), l]]",
                              block_err, kBlockFormTolerance));
  checks.push_back(make_check("W^n block form (T_n, sqrt(1-l^2) U_{n-1}), n <= 10",
                              power_err, kChebyshevTolerance));

  {
    const Eigen::VectorXcd phi = random_unit(ne, rng);
    const StateVector input(RegisterLayout::index_register(a.index_qubits()), phi);
    Eigen::VectorXcd prev = phi;
    Eigen::VectorXcd cur = scaled * phi;
    double err = 0.0;
    for (int p = 0; p <= kMaxCheckedOrder; ++p) {
      Eigen::VectorXcd expect;
      if (p == 0) {
        expect = phi;
      } else if (p == 1) {
        expect = cur;
      } else {
        Eigen::VectorXcd next = 2.0 * (scaled * cur) - prev;
        prev = cur;
        cur = next;
        expect = cur;
      }
      const BlockApplication out = chebyshev_block_apply(w, p, input);
      err = std::max(err, (out.projected.amplitudes() - expect).cwiseAbs().maxCoeff());
      err = std::max(err, std::abs(out.projected.norm() * out.projected.norm() +
                                   out.garbage_norm * out.garbage_norm - 1.0));
    }
    checks.push_back(make_check("block apply matches T_{n+1} = 2(A/s)T_n - T_{n-1}",
                                err, kChebyshevTolerance));
  }
  return checks;
}

} // namespace chebwalk
