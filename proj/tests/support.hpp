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
// Shared fixtures: random sparse Hermitian instances generated together with
// an independent dense copy, and small dense-algebra oracles.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "chebwalk/sparse_matrix.hpp"
#include "chebwalk/state_vector.hpp"

namespace chebwalk::testing {

struct Instance {
  SparseHermitianMatrix matrix;
  /// Built from the same coordinate list, independently of the library.
  Eigen::MatrixXcd dense;
  Index dimension = 0;
  Index sparsity = 0;
};

inline Complex unit_disk(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

/// Hermitian N x N with at most s nonzeros per row; off-diagonal entries in
/// the unit disk, diagonal real in [-1, 1].
inline Instance random_instance(std::mt19937_64 &rng, Index n, Index s,
                                double fill = 0.9) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Entry> entries;
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                  static_cast<Eigen::Index>(n));
  std::vector<Index> degree(n, 0);
  for (Index i = 0; i < n; ++i) {
    if (u(rng) < fill) {
      const double v = 2.0 * u(rng) - 1.0;
      entries.push_back({i, i, v});
      dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v;
      ++degree[i];
    }
  }
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto &[i, j] : pairs) {
    if (degree[i] < s && degree[j] < s && u(rng) < fill) {
      const Complex v = unit_disk(rng);
      entries.push_back({i, j, v});
      dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      dense(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = std::conj(v);
      ++degree[i];
      ++degree[j];
    }
  }
  return {SparseHermitianMatrix::from_entries(n, s, entries), dense, n, s};
}

inline Eigen::VectorXcd random_unit_vector(std::mt19937_64 &rng, Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    v(k) = Complex(g(rng), g(rng));
  }
  return v / v.norm();
}

inline StateVector index_state(const Eigen::VectorXcd &v) {
  return StateVector(RegisterLayout::index_register(log2_exact(static_cast<Index>(v.size()))), v);
}

/// Diagonal matrix from real values.
inline SparseHermitianMatrix diagonal(const std::vector<double> &d, Index s = 1) {
  std::vector<Entry> entries;
  for (Index i = 0; i < d.size(); ++i) {
    if (d[i] != 0.0) {
      entries.push_back({i, i, d[i]});
    }
  }
  return SparseHermitianMatrix::from_entries(d.size(), s, entries);
}

inline SparseHermitianMatrix identity(Index n) {
  return diagonal(std::vector<double>(n, 1.0));
}

/// T_n(M) v by the three-term recurrence on dense matrices.
inline Eigen::VectorXcd dense_chebyshev(const Eigen::MatrixXcd &m, int order,
                                        const Eigen::VectorXcd &v) {
  Eigen::VectorXcd prev = v;
  if (order == 0) {
    return prev;
  }
  Eigen::VectorXcd cur = m * v;
  for (int k = 1; k < order; ++k) {
    Eigen::VectorXcd next = 2.0 * (m * cur) - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Closed forms used as independent references for the recurrences.
inline double chebyshev_t_closed(int n, double x) {
  return std::cos(n * std::acos(std::clamp(x, -1.0, 1.0)));
}
inline double chebyshev_u_closed(int n, double x) {
  const double t = std::acos(std::clamp(x, -1.0, 1.0));
  const double st = std::sin(t);
  if (std::abs(st) < 1e-12) {
    const double sign = (x > 0 || n % 2 == 0) ? 1.0 : -1.0;
    return sign * (n + 1);
  }
  return std::sin((n + 1) * t) / st;
}

} // namespace chebwalk::testing
