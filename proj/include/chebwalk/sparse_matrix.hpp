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
 * Sparse Hermitian matrices with oracle-style entry access.
 *
 * A matrix is immutable once built. Every row carries a "padded pattern":
 * its nonzero column set extended with the smallest unused column indices
 * until it holds exactly `sparsity()` indices. The walk construction sums
 * over this pattern, so each row contributes the same number of terms.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace chebwalk {

using Complex = std::complex<double>;
using Index = std::size_t;

/// Absolute tolerance for Hermiticity and real-diagonal checks.
inline constexpr double kHermitianTolerance = 1e-10;
/// Slack allowed above the unit entry-magnitude bound.
inline constexpr double kMagnitudeTolerance = 1e-12;

struct Entry {
  Index row = 0;
  Index col = 0;
  Complex value;
};

struct RowEntry {
  Index col = 0;
  Complex value;
};

/// Derived, informational quantities. The spectral data is only computed for
/// dimensions small enough for a dense eigensolver.
struct MatrixMetadata {
  /// max_i sum_j |a_ij|; bounds the spectral norm (Gershgorin).
  double max_row_sum = 0.0;
  /// max_row_sum / s, always <= 1 for a valid matrix.
  double scaled_norm_bound = 0.0;
  Index max_row_nonzeros = 0;
  std::optional<double> spectral_norm;
  /// Ratio of largest to smallest singular value; +inf when singular.
  std::optional<double> condition_number;
};

class SparseHermitianMatrix {
public:
  /// Largest dimension for which spectral metadata is computed.
  static constexpr Index kSpectralMetadataLimit = 1024;

  /// Builds and validates a matrix from a coordinate list. For an
  /// off-diagonal pair it is enough to list one of (i,j)/(j,i); the other
  /// is the conjugate. Listing both is accepted only when they agree.
  /// Throws ValidationError naming the offending indices.
  static SparseHermitianMatrix from_entries(Index dimension, Index sparsity,
                                            std::span<const Entry> entries);

  Index dimension() const { return dimension_; }
  Index sparsity() const { return sparsity_; }
  /// log2 of the dimension.
  int index_qubits() const { return index_qubits_; }

  /// Oracle query a_ij; zero when not stored. Throws on out-of-range index.
  Complex entry(Index i, Index j) const;

  /// Stored nonzeros of row i, sorted by column.
  std::span<const RowEntry> row(Index i) const;
  /// Row i's nonzero columns extended to exactly `sparsity()` indices.
  std::span<const Index> padded_pattern(Index i) const;

  const MatrixMetadata &metadata() const { return metadata_; }

  /// Every stored nonzero (both triangles), row-major.
  std::vector<Entry> entries() const;
  /// Conjugate transpose. For a Hermitian matrix this equals the original,
  /// but it is built by transposing the coordinate list.
  SparseHermitianMatrix adjoint() const;
  Eigen::MatrixXcd to_dense() const;

private:
  SparseHermitianMatrix() = default;

  Index dimension_ = 0;
  Index sparsity_ = 0;
  int index_qubits_ = 0;
  std::vector<std::vector<RowEntry>> rows_;
  std::vector<std::vector<Index>> padded_;
  MatrixMetadata metadata_;
};

/// Free-function form of SparseHermitianMatrix::entry.
Complex query_entry(const SparseHermitianMatrix &a, Index i, Index j);

/// True when n is a power of two (n >= 1).
bool is_power_of_two(Index n);
int log2_exact(Index n);

/// Parses the qmat v1 text format. `source` names the input in errors.
SparseHermitianMatrix parse_qmat(std::istream &in,
                                 const std::string &source = "<stream>");
/// Reads and validates a qmat v1 file.
SparseHermitianMatrix load_matrix(const std::string &path);
/// Writes the diagonal and upper triangle in qmat v1 form.
void write_qmat(std::ostream &out, const SparseHermitianMatrix &a);

} // namespace chebwalk
