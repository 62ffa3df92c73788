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
#pragma once

#include "chebwalk/sparse_matrix.hpp"

namespace chebwalk {

/// Column actually queried when the relocated oracle is asked for (i, j):
/// (i,0) reads a_ii, (i,i) reads a_i0, everything else is untouched. The map
/// is an involution on the column index for each fixed row.
Index relocated_column(Index row, Index col);

/// A' = A with each row's diagonal entry swapped into column 0, plus the
/// Hermitian dilation [[0, A'], [A'^dagger, 0]] that the walk needs because
/// A' is not Hermitian in general.
class RelocatedMatrix {
public:
  explicit RelocatedMatrix(SparseHermitianMatrix base);

  const SparseHermitianMatrix &base() const { return base_; }
  Index dimension() const { return base_.dimension(); }

  /// A'(i, j), routed through the base oracle.
  Complex entry(Index i, Index j) const;

  /// H(A'), of dimension 2N and sparsity dilated_sparsity().
  const SparseHermitianMatrix &dilation() const { return dilation_; }
  /// s' = max(s, nonzeros in any row or column of A'). Never below s.
  Index dilated_sparsity() const { return dilation_.sparsity(); }

  /// Index of the dilation basis vector whose image under H(A') is column 0
  /// of A' (stacked on top of N zeros).
  Index column_zero_selector() const { return base_.dimension(); }

private:
  SparseHermitianMatrix base_;
  SparseHermitianMatrix dilation_;
};

RelocatedMatrix relocate_diagonal(const SparseHermitianMatrix &a);

} // namespace chebwalk
